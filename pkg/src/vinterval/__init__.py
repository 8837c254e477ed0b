"""Vector intervals, checked vector access and interval-designed in-place sorts."""

from .checked import (
    CheckedVector,
    IndexOutsideInterval,
    IntervalViolation,
    InvalidInterval,
    JsonLinesSink,
    Mode,
    NotSubinterval,
    RawOutOfBounds,
    SortStats,
    StackUnderflow,
    TraceEvent,
    read_trace,
)
from .folds import EmptyVector, avg_vector, fold_left_to_right, fold_right_to_left, sum_elems
from .heapsort import heap_sort
from .interval import (
    EmptyInterval,
    Interval,
    contains,
    full_interval,
    is_empty,
    is_valid,
    make_interval,
    shrink_high,
    shrink_low,
    subinterval_of,
)
from .quicksort import qs_in_place
from .radixsort import Bucket, BucketFull, NegativeElement, radix_sort_in_place

SORTS = {
    "quick": qs_in_place,
    "heap": heap_sort,
    "radix": radix_sort_in_place,
}

__version__ = "0.1.0"
