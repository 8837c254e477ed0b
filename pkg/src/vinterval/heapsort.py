"""In-place heapsort over an array-embedded max-heap.

A node at index ``k`` has children at ``2k+1`` and ``2k+2``.  ``heapify``
walks ``[1..n-1]`` right to left, fixing each child against its parent and
trickling the swapped value down; ``sort_heap_interval`` then moves the root
to ``high`` and shrinks the interval by one each step.
"""

from __future__ import annotations

import operator
from typing import Callable, Optional

from .checked import CheckedVector
from .interval import EmptyInterval, Interval, full_interval, is_empty, shrink_high

__all__ = ["heap_sort", "heapify", "sort_heap_interval", "trickle_down", "parent", "max_child_index"]


def parent(k: int) -> int:
    if k < 1:
        raise ValueError(f"index {k} has no parent")
    return (k - 1) // 2


def max_child_index(v: CheckedVector, lc: int, rc: int) -> int:
    """Index of the larger child; ties go to the left child."""
    left = v.read(lc)
    right = v.read(rc)
    return rc if v.compare(right, left, operator.gt) else lc


def trickle_down(v: CheckedVector, i: Interval) -> None:
    """Re-establish a heap rooted at ``i.low`` within ``i``.

    Both subheaps below ``i.low`` must already be heaps.  Each recursive call
    keeps ``high`` and moves ``low`` to a child index, so it terminates once
    the root has no children inside the interval.
    """
    if is_empty(i):
        raise EmptyInterval(i, "trickle_down")
    with v.interval(i, label="trickle_down"):
        low, high = i
        lc = 2 * low + 1
        rc = 2 * low + 2
        if lc > high:
            return
        if rc > high:
            if v.compare(v.read(lc), v.read(low), operator.le):
                return
            v.swap(low, lc)
            trickle_down(v, Interval(lc, high))
        else:
            mc = max_child_index(v, lc, rc)
            if v.compare(v.read(low), v.read(mc), operator.ge):
                return
            v.swap(low, mc)
            trickle_down(v, Interval(mc, high))


def heapify(v: CheckedVector, i: Interval) -> None:
    """Turn the vector into a heap by fixing every index of ``i`` against its parent.

    ``i.low`` must be at least 1: index 0 has no parent.  A swap may break the
    heap below ``high``, which is repaired over ``[high..n-1]``.
    """
    n = len(v)
    if not is_empty(i) and i.low < 1:
        raise ValueError(f"heapify interval {i} includes the root index 0")
    with v.interval(i, label="heapify"):
        while i.low <= i.high:
            high = i.high
            p = parent(high)
            # the parent may lie left of i; [p..high] is the containing interval
            with v.interval(Interval(p, high), label="heapify_parent"):
                if v.compare(v.read(p), v.read(high), operator.gt):
                    swapped = False
                else:
                    v.swap(p, high)
                    swapped = True
            if swapped:
                trickle_down(v, Interval(high, n - 1))
            i = shrink_high(i)


def sort_heap_interval(v: CheckedVector, i: Interval,
                       on_step: Optional[Callable[[int], None]] = None) -> None:
    """Sort a heap occupying ``i`` into non-decreasing order.

    ``on_step`` is called with the index just filled after every step.
    """
    with v.interval(i, label="sort"):
        while i.low <= i.high:
            v.swap(i.low, i.high)
            rest = shrink_high(i)
            if not is_empty(rest):
                trickle_down(v, rest)
            if on_step is not None:
                on_step(i.high)
            i = rest


def heap_sort(v: CheckedVector) -> None:
    n = len(v)
    whole = full_interval(n)
    with v.interval(whole, label="heap_sort"):
        if n > 0:
            heapify(v, Interval(1, n - 1))
        sort_heap_interval(v, whole)
