"""In-place quicksort designed around vector intervals.

The pivot is always the element at ``low``.  ``separate`` repeatedly asks
two structural searches for the largest index holding a value ``<= pivot``
(``small_index``) and the smallest index holding a value ``> pivot``
(``large_index``), swaps them when they are out of order, and continues on
the interval those two indices span.
"""

from __future__ import annotations

import contextlib
import operator
import sys

from .checked import CheckedVector
from .folds import find_left_to_right, find_right_to_left
from .interval import EmptyInterval, Interval, full_interval, is_empty

__all__ = ["qs_in_place", "qs_aux", "partition", "separate", "small_index", "large_index"]


@contextlib.contextmanager
def recursion_room(frames: int):
    """Temporarily raise the recursion limit by ``frames``."""
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(old + frames)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def small_index(v: CheckedVector, i: Interval, pivot: int) -> int:
    """Largest index in ``i`` with a value <= ``pivot``; ``i.low`` if none."""
    if is_empty(i):
        raise EmptyInterval(i, "small_index")
    return find_right_to_left(v, i, lambda x: v.compare(x, pivot, operator.le),
                              default=i.low, label="small_index")


def large_index(v: CheckedVector, i: Interval, pivot: int) -> int:
    """Smallest index in ``i`` with a value > ``pivot``; ``i.high`` if none."""
    if is_empty(i):
        raise EmptyInterval(i, "large_index")
    return find_left_to_right(v, i, lambda x: v.compare(x, pivot, operator.gt),
                              default=i.high, label="large_index")


def _separate(v: CheckedVector, i: Interval, pivot: int) -> int:
    with v.interval(i, label="separate"):
        s = small_index(v, i, pivot)
        l = large_index(v, i, pivot)
        if s <= l:
            return s
        v.swap(s, l)
        # v[l] <= pivot < v[s] now, so the next round works strictly inside [l..s]
        return _separate(v, Interval(l, s), pivot)


def separate(v: CheckedVector, i: Interval, pivot_pos: int) -> int:
    """Move values <= the pivot before values > it; return the last <= index.

    The pivot value is read once at ``pivot_pos``; later rounds may run on
    intervals that no longer contain that position.
    """
    if is_empty(i):
        raise EmptyInterval(i, "separate")
    with v.interval(i, label="separate"):
        pivot = v.read(pivot_pos)
    return _separate(v, i, pivot)


def partition(v: CheckedVector, i: Interval, pivot_pos: int) -> int:
    """Partition ``i`` around ``v[pivot_pos]`` and return the pivot's final index."""
    if is_empty(i):
        raise EmptyInterval(i, "partition")
    with v.interval(i, label="partition"):
        pivot = v.read(pivot_pos)
        pp = _separate(v, i, pivot)
        v.swap(pivot_pos, pp)
    return pp


def qs_aux(v: CheckedVector, i: Interval) -> None:
    with v.interval(i, label="qs_aux"):
        if is_empty(i):
            return
        pp = partition(v, i, i.low)
        qs_aux(v, Interval(i.low, pp - 1))
        qs_aux(v, Interval(pp + 1, i.high))


def qs_in_place(v: CheckedVector) -> None:
    n = len(v)
    # sorted input recurses once per element; each level costs a few frames
    with recursion_room(4 * n):
        qs_aux(v, full_interval(n))
