"""LSD radixsort for non-negative integers using ten fixed-capacity buckets."""

from __future__ import annotations

import operator
from typing import Callable, Iterator, Optional, Sequence

from .checked import CheckedVector
from .folds import find_left_to_right, fold_left_to_right
from .interval import Interval, full_interval

__all__ = [
    "Bucket",
    "BucketFull",
    "NegativeElement",
    "make_bucket",
    "bucket_add",
    "bucket_dump",
    "bucket_size",
    "bucket_elems",
    "make_buckets",
    "compute_bucket_number",
    "digit_count",
    "digit_passes",
    "bucketize",
    "dump_buckets",
    "radix_sort_in_place",
]

RADIX = 10


class BucketFull(Exception):
    pass


class NegativeElement(ValueError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"radixsort needs non-negative elements; v[{index}] = {value}")


class Bucket:
    """A FIFO of at most ``capacity`` integers backed by a fixed slot vector.

    Vacant slots hold ``None``.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError(f"bucket capacity must be non-negative, got {capacity}")
        self._slots: list[Optional[int]] = [None] * capacity
        self._count = 0

    @property
    def capacity(self) -> int:
        return len(self._slots)

    def __len__(self) -> int:
        return self._count

    def __iter__(self) -> Iterator[int]:
        return iter(self._slots[:self._count])

    def __repr__(self) -> str:
        return f"Bucket({list(self)!r}, capacity={self.capacity})"

    def size(self) -> int:
        return self._count

    def elems(self) -> list[Optional[int]]:
        return list(self._slots)

    def add(self, n: int) -> None:
        if self._count == len(self._slots):
            raise BucketFull(f"bucket of capacity {len(self._slots)} is full")
        self._slots[self._count] = n
        self._count += 1

    def dump(self, dest: CheckedVector, i: int) -> None:
        """Write the contents to ``dest[i..i+size-1]`` in order, then empty the bucket.

        Writes are checked against ``dest``'s active interval.
        """
        slots = self._slots
        for k in Interval(0, self._count - 1).indices():
            dest.write(i + k, slots[k])
        for k in range(self._count):
            slots[k] = None
        self._count = 0


def make_bucket(k: int) -> Bucket:
    return Bucket(k)


def bucket_add(b: Bucket, n: int) -> None:
    b.add(n)


def bucket_dump(b: Bucket, dest: CheckedVector, i: int) -> None:
    b.dump(dest, i)


def bucket_size(b: Bucket) -> int:
    return b.size()


def bucket_elems(b: Bucket) -> list[Optional[int]]:
    return b.elems()


def make_buckets(capacity: int) -> list[Bucket]:
    return [Bucket(capacity) for _ in range(RADIX)]


def compute_bucket_number(num: int, i: int) -> int:
    """Decimal digit of ``num`` at position ``i`` (0 is the ones digit)."""
    return (num // RADIX ** i) % RADIX


def digit_count(x: int) -> int:
    d = 1
    while x >= RADIX:
        x //= RADIX
        d += 1
    return d


def digit_passes(v: CheckedVector) -> int:
    """Number of digit passes: the digit count of the largest element (0 if empty)."""
    n = len(v)
    if n == 0:
        return 0

    def bigger(x, acc):
        return x if acc is None or v.compare(x, acc, operator.gt) else acc

    return digit_count(fold_left_to_right(v, full_interval(n), None, bigger, label="digit_passes"))


def bucketize(v: CheckedVector, i: Interval, d: int, buckets: Sequence[Bucket]) -> None:
    """Append every element of ``i``, left to right, to the bucket of its ``d``-th digit."""
    with v.interval(i, label="bucketize"):
        while i.low <= i.high:
            num = v.read(i.low)
            buckets[compute_bucket_number(num, d)].add(num)
            i = Interval(i.low + 1, i.high)


def dump_buckets(v: CheckedVector, buckets: Sequence[Bucket], bnum: int = 0, index: int = 0) -> None:
    if bnum == len(buckets):
        return
    bucket = buckets[bnum]
    newindex = index + bucket.size()
    bucket.dump(v, index)
    dump_buckets(v, buckets, bnum + 1, newindex)


def radix_sort_in_place(v: CheckedVector, on_pass: Optional[Callable[[int], None]] = None) -> int:
    """Sort ``v`` by decimal digits, least significant first.

    Returns the number of passes made.  ``on_pass`` is called with the digit
    position after each pass has been dumped back into ``v``.
    """
    n = len(v)
    whole = full_interval(n)
    with v.interval(whole, label="radix_sort"):
        bad = find_left_to_right(v, whole, lambda x: x < 0, label="radix_sort")
        if bad is not None:
            raise NegativeElement(bad, v.read(bad))
        sz = digit_passes(v)
        buckets = make_buckets(n)

        def helper(i: int) -> None:
            if i == sz:
                return
            bucketize(v, whole, i, buckets)
            dump_buckets(v, buckets, 0, 0)
            if on_pass is not None:
                on_pass(i)
            helper(i + 1)

        helper(0)
    return sz
