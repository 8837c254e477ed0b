"""Randomized property suites behind ``vinterval verify``.

Every check builds its own oracle from plain Python (``sorted``, brute-force
scans) and never calls back into the code path it is checking.
"""

from __future__ import annotations

import math
import operator
import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .checked import CheckedVector, TraceEvent
from .folds import avg_vector, fold_left_to_right, fold_right_to_left, sum_elems
from .heapsort import heap_sort, heapify
from .interval import Interval, full_interval
from .quicksort import partition, qs_in_place
from .radixsort import radix_sort_in_place

__all__ = ["PropertyResult", "properties", "run_all", "random_vectors", "trickle_depths", "make_input"]

MAX_VALUE = 10 ** 6


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


class _Failure(Exception):
    pass


def random_vectors(seed: int, count: int, max_len: int = 64, lo: int = 0,
                   hi: int = MAX_VALUE, min_len: int = 0) -> Iterator[list[int]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_len, max_len)
        yield [rng.randint(lo, hi) for _ in range(n)]


def make_input(pattern: str, n: int, seed: int = 0) -> list[int]:
    if pattern == "random":
        rng = random.Random(seed * 1_000_003 + n)
        return [rng.randint(0, MAX_VALUE) for _ in range(n)]
    if pattern == "sorted":
        return list(range(n))
    if pattern == "reverse":
        return list(range(n - 1, -1, -1))
    if pattern == "equal":
        return [7] * n
    raise ValueError(f"unknown pattern {pattern!r}")


def trickle_depths(events: list[TraceEvent]) -> list[int]:
    """Lengths of each nested chain of ``trickle_down`` pushes in a trace."""
    depths = []
    current = 0
    for ev in events:
        if ev.detail != "trickle_down":
            continue
        if ev.kind == "interval-push":
            current += 1
            if current == 1:
                depths.append(1)
            else:
                depths[-1] = max(depths[-1], current)
        elif ev.kind == "interval-pop":
            current -= 1
    return depths


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failure(msg)


# -- individual properties -----------------------------------------------------

def _fold_order(ctx) -> str:
    cons = lambda x, acc: [x] + acc  # noqa: E731
    for n in range(33):
        v = ctx.vector(range(n))
        whole = full_interval(n)
        rl = fold_right_to_left(v, whole, [], cons)
        lr = fold_left_to_right(v, whole, [], cons)
        _check(rl == list(range(n - 1, -1, -1)), f"right-to-left order for n={n}: {rl}")
        _check(lr == list(range(n)), f"left-to-right order for n={n}: {lr}")
    return "n = 0..32"


def _valid_subinterval(rng: random.Random, n: int) -> Interval:
    low = rng.randint(0, n)
    high = rng.randint(low - 1, n - 1)
    return Interval(low, high)


def _fold_sum(ctx) -> str:
    rng = random.Random(ctx.seed)
    add = operator.add
    for xs in random_vectors(ctx.seed, ctx.runs, lo=-1000, hi=1000):
        i = _valid_subinterval(rng, len(xs))
        expected = 0
        for k in range(i.low, i.high + 1):
            expected += xs[k]
        v = ctx.vector(xs)
        _check(sum_elems(v, i) == expected, f"sum_elems({xs}, {i})")
        _check(fold_right_to_left(v, i, 0, add) == fold_left_to_right(v, i, 0, add),
               f"fold directions disagree on {xs}, {i}")
    return f"{ctx.runs} vectors"


def _avg(ctx) -> str:
    a = avg_vector(ctx.vector([6, 7, 8, 9]))
    b = avg_vector(ctx.vector([1, 2, 3]))
    _check(abs(a - 7.5) <= 0.01 and abs(b - 2) <= 0.01, f"got {a}, {b}")
    return f"{a}, {b}"


def _oracle(sort: Callable, strict: bool):
    def prop(ctx) -> str:
        for xs in random_vectors(ctx.seed, ctx.runs):
            v = ctx.vector(xs, strict=strict)
            sort(v)
            out = v.to_list()
            _check(out == sorted(xs), f"{xs} -> {out}")
            _check(Counter(out) == Counter(xs), f"multiset changed for {xs}")
        return f"{ctx.runs} vectors, {'strict' if strict else 'valid-only'} checking"
    return prop


def _partition_post(ctx) -> str:
    rng = random.Random(ctx.seed + 1)
    for xs in random_vectors(ctx.seed + 1, ctx.runs, min_len=1, hi=20):
        n = len(xs)
        low = rng.randrange(n)
        high = rng.randint(low, n - 1)
        v = ctx.vector(xs, strict=True)
        with v.interval(full_interval(n), label="verify"):
            pp = partition(v, Interval(low, high), low)
        out = v.to_list()
        pivot = xs[low]
        _check(low <= pp <= high, f"pp={pp} outside [{low}..{high}] for {xs}")
        _check(out[pp] == pivot, f"v[pp]={out[pp]} != pivot {pivot} for {xs}")
        _check(all(out[k] <= pivot for k in range(low, pp)), f"left side > pivot for {xs}, [{low}..{high}]")
        _check(all(out[k] > pivot for k in range(pp + 1, high + 1)), f"right side <= pivot for {xs}, [{low}..{high}]")
        _check(Counter(out[low:high + 1]) == Counter(xs[low:high + 1]), f"multiset changed for {xs}")
        _check(out[:low] == xs[:low] and out[high + 1:] == xs[high + 1:], f"outside interval touched for {xs}")
    return f"{ctx.runs} intervals"


def _heapify_post(ctx) -> str:
    for xs in random_vectors(ctx.seed + 2, ctx.runs, hi=50):
        n = len(xs)
        v = ctx.vector(xs)
        if n:
            heapify(v, Interval(1, n - 1))
        out = v.to_list()
        _check(all(out[(k - 1) // 2] >= out[k] for k in range(1, n)), f"not a heap: {xs} -> {out}")
        _check(Counter(out) == Counter(xs), f"multiset changed for {xs}")
    return f"{ctx.runs} vectors"


def _trickle_depth(ctx) -> str:
    worst = 0
    for xs in random_vectors(ctx.seed + 3, ctx.runs):
        n = len(xs)
        events: list[TraceEvent] = []
        v = ctx.vector(xs, trace=events.append)
        heap_sort(v)
        bound = math.ceil(math.log2(n + 1)) + 1
        deepest = max(trickle_depths(events), default=0)
        worst = max(worst, deepest)
        _check(deepest <= bound, f"depth {deepest} > {bound} for n={n}")
    return f"deepest chain {worst}"


def _radix_passes(ctx) -> str:
    for xs in random_vectors(ctx.seed + 4, ctx.runs):
        tagged = list(enumerate(xs))
        passes: list[int] = []

        def after_pass(d: int, v: CheckedVector) -> None:
            nonlocal tagged
            mod = 10 ** (d + 1)
            digit_key = lambda t: (t[1] // 10 ** d) % 10  # noqa: E731
            # stable reference pass over position-tagged values
            tagged = sorted(tagged, key=digit_key)
            out = v.to_list()
            _check(out == [x for _, x in tagged], f"pass {d} not stable for {xs}")
            keys = [x % mod for x in out]
            _check(keys == sorted(keys), f"pass {d} not sorted by x mod {mod} for {xs}")
            passes.append(d)

        v = ctx.vector(xs, strict=ctx.strict)
        total = radix_sort_in_place(v, on_pass=lambda d: after_pass(d, v))
        expected = len(str(max(xs))) if xs else 0
        _check(total == expected and passes == list(range(expected)),
               f"{total} passes, expected {expected} for {xs}")
        _check(v.to_list() == sorted(xs), f"radix result wrong for {xs}")
    return f"{ctx.runs} vectors"


def _growth(sort: Callable, sizes: tuple[int, ...], lo: float, hi: float):
    def prop(ctx) -> str:
        counts = []
        for n in sizes:
            v = ctx.vector(range(n))
            sort(v)
            counts.append(v.stats.comparisons)
        ratios = [b / a for a, b in zip(counts, counts[1:])]
        _check(all(lo <= r <= hi for r in ratios), f"ratios {ratios}")
        return ", ".join(f"{r:.3f}" for r in ratios)
    return prop


def _checking_transparent(ctx) -> str:
    for name, sort in (("quick", qs_in_place), ("heap", heap_sort), ("radix", radix_sort_in_place)):
        for xs in random_vectors(ctx.seed + 5, ctx.runs // 10):
            on = ctx.vector(xs)
            off = ctx.vector(xs, checking=False)
            sort(on)
            sort(off)
            _check(on.to_list() == off.to_list(), f"{name}: checking changed result for {xs}")
            _check(on.stats == off.stats, f"{name}: checking changed counters for {xs}")
    return "quick, heap, radix"


class _Context:
    def __init__(self, seed: int, runs: int, strict: bool, flip_comparison: Optional[int]):
        self.seed = seed
        self.runs = runs
        self.strict = strict
        self.flip_comparison = flip_comparison

    def vector(self, xs, strict: bool = False, checking: bool = True, trace=None) -> CheckedVector:
        return CheckedVector(xs, strict=strict, checking=checking, trace=trace,
                             flip_comparison=self.flip_comparison)


def properties(strict: bool = False) -> list[tuple[str, Callable]]:
    return [
        ("fold-template-order", _fold_order),
        ("fold-sum-oracle", _fold_sum),
        ("avg-vector", _avg),
        ("quick-oracle-strict", _oracle(qs_in_place, strict=True)),
        ("heap-oracle", _oracle(heap_sort, strict=False)),
        ("radix-oracle", _oracle(radix_sort_in_place, strict=strict)),
        ("partition-postcondition", _partition_post),
        ("heapify-postcondition", _heapify_post),
        ("trickle-down-depth", _trickle_depth),
        ("radix-pass-structure", _radix_passes),
        ("quick-sorted-quadratic", _growth(qs_in_place, (128, 256, 512), 3.5, 4.5)),
        ("heap-sorted-nlogn", _growth(heap_sort, (512, 1024), 0.0, 2.6)),
        ("checking-transparent", _checking_transparent),
    ]


def run_all(seed: int = 0, runs: int = 1000, strict: bool = False,
            flip_comparison: Optional[int] = None) -> list[PropertyResult]:
    """Run every property; ``strict`` extends subinterval checking to radixsort.

    Quicksort properties always run in strict subinterval mode.
    """
    ctx = _Context(seed, runs, strict, flip_comparison)
    results = []
    for name, prop in properties(strict):
        try:
            detail = prop(ctx)
            results.append(PropertyResult(name, True, detail))
        except _Failure as exc:
            results.append(PropertyResult(name, False, str(exc)))
        except Exception as exc:  # a faulty run may fail in other ways
            results.append(PropertyResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
