"""Vector intervals: index ranges ``[low..high]`` into a fixed-size vector.

An interval is empty when ``low > high``.  Whether it is *valid* depends on
the length of the vector it indexes, so validity is a separate predicate
rather than a construction-time check.
"""

from __future__ import annotations

from typing import NamedTuple

__all__ = [
    "Interval",
    "make_interval",
    "is_empty",
    "is_valid",
    "contains",
    "shrink_high",
    "shrink_low",
    "full_interval",
    "subinterval_of",
    "EmptyInterval",
]


class EmptyInterval(ValueError):
    """An operation that needs at least one index was given an empty interval."""

    def __init__(self, interval: Interval, where: str = ""):
        self.interval = interval
        self.where = where
        msg = f"empty interval {interval}"
        if where:
            msg += f" passed to {where}"
        super().__init__(msg)


class Interval(NamedTuple):
    low: int
    high: int

    def __str__(self) -> str:
        return f"[{self.low}..{self.high}]"

    def __len__(self) -> int:
        return max(0, self.high - self.low + 1)

    @property
    def empty(self) -> bool:
        return self.low > self.high

    def indices(self) -> range:
        return range(self.low, self.high + 1)


def make_interval(low: int, high: int) -> Interval:
    return Interval(low, high)


def is_empty(i: Interval) -> bool:
    return i.low > i.high


def is_valid(i: Interval, n: int) -> bool:
    """True if ``i`` is a legal interval for a vector of length ``n``.

    The bound ``0 <= low <= n`` and ``-1 <= high <= n - 1`` admits both
    empty forms reached by shrinking: ``[0..-1]`` and ``[n..n-1]``.
    """
    return 0 <= i.low <= n and -1 <= i.high <= n - 1


def contains(i: Interval, k: int) -> bool:
    return i.low <= k <= i.high


def shrink_high(i: Interval) -> Interval:
    """Drop the ``high`` index (right-to-left consumption)."""
    if i.low > i.high:
        raise EmptyInterval(i, "shrink_high")
    return Interval(i.low, i.high - 1)


def shrink_low(i: Interval) -> Interval:
    """Drop the ``low`` index (left-to-right consumption)."""
    if i.low > i.high:
        raise EmptyInterval(i, "shrink_low")
    return Interval(i.low + 1, i.high)


def full_interval(n: int) -> Interval:
    if n < 0:
        raise ValueError(f"vector length must be non-negative, got {n}")
    return Interval(0, n - 1)


def subinterval_of(inner: Interval, outer: Interval) -> bool:
    if inner.low > inner.high:
        return True
    return outer.low <= outer.high and outer.low <= inner.low and inner.high <= outer.high
