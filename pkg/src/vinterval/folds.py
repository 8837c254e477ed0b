"""Structural-recursion templates over vector intervals.

``fold_right_to_left`` consumes an interval from ``high`` down to ``low`` and
``fold_left_to_right`` from ``low`` up to ``high``.  Both compute

    step(v[first], fold(rest))

so a ``cons``-style step rebuilds the elements in visiting order.  They are
realized with loops so that intervals as long as the vector fit within the
interpreter's recursion limit; reads still happen in template order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, TypeVar

from .checked import CheckedVector
from .interval import Interval, full_interval, shrink_high, shrink_low

__all__ = [
    "fold_right_to_left",
    "fold_left_to_right",
    "find_right_to_left",
    "find_left_to_right",
    "sum_elems",
    "avg_vector",
    "EmptyVector",
]

A = TypeVar("A")


class EmptyVector(ValueError):
    pass


def fold_right_to_left(v: CheckedVector, i: Interval, init: A,
                       step: Callable[[int, A], A], label: str = "fold_right_to_left") -> A:
    with v.interval(i, label=label):
        visited = []
        while i.low <= i.high:
            visited.append(v.read(i.high))
            i = shrink_high(i)
    acc = init
    # innermost call (the one that saw ``low``) finishes first
    for x in reversed(visited):
        acc = step(x, acc)
    return acc


def fold_left_to_right(v: CheckedVector, i: Interval, init: A,
                       step: Callable[[int, A], A], label: str = "fold_left_to_right") -> A:
    with v.interval(i, label=label):
        visited = []
        while i.low <= i.high:
            visited.append(v.read(i.low))
            i = shrink_low(i)
    acc = init
    for x in reversed(visited):
        acc = step(x, acc)
    return acc


def find_right_to_left(v: CheckedVector, i: Interval, pred: Callable[[int], bool],
                       default: Optional[int] = None, label: str = "find_right_to_left") -> Optional[int]:
    """Largest index in ``i`` whose element satisfies ``pred``, else ``default``."""
    with v.interval(i, label=label):
        while i.low <= i.high:
            if pred(v.read(i.high)):
                return i.high
            i = shrink_high(i)
    return default


def find_left_to_right(v: CheckedVector, i: Interval, pred: Callable[[int], bool],
                       default: Optional[int] = None, label: str = "find_left_to_right") -> Optional[int]:
    """Smallest index in ``i`` whose element satisfies ``pred``, else ``default``."""
    with v.interval(i, label=label):
        while i.low <= i.high:
            if pred(v.read(i.low)):
                return i.low
            i = shrink_low(i)
    return default


def _add(x: int, acc: int) -> int:
    return x + acc


def sum_elems(v: CheckedVector, i: Interval) -> int:
    return fold_right_to_left(v, i, 0, _add, label="sum_elems")


def avg_vector(v: CheckedVector) -> int | float:
    """Mean of a non-empty vector; exact (an int) when the sum divides evenly."""
    n = len(v)
    if n == 0:
        raise EmptyVector("average of an empty vector is undefined")
    mean = Fraction(sum_elems(v, full_interval(n)), n)
    return int(mean) if mean.denominator == 1 else float(mean)
