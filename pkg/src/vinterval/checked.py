"""A vector wrapper that checks every access against the active interval.

Algorithms register each interval they generate with :meth:`CheckedVector.interval`
(or the explicit push/pop pair).  Reads, writes and swaps must then name an
index that is a member of the interval on top of the stack.  A bad index is
reported as :class:`IndexOutsideInterval` before it can turn into a raw
out-of-bounds access, and the error carries enough context to find the
function that generated the offending interval.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass
from typing import IO, Callable, Iterable, Optional

from .interval import Interval, is_valid, subinterval_of

__all__ = [
    "Mode",
    "SortStats",
    "TraceEvent",
    "JsonLinesSink",
    "read_trace",
    "CheckedVector",
    "IntervalViolation",
    "InvalidInterval",
    "NotSubinterval",
    "IndexOutsideInterval",
    "RawOutOfBounds",
    "StackUnderflow",
]


class Mode(enum.Enum):
    REQUIRE_VALID = "require-valid"
    REQUIRE_SUBINTERVAL = "require-subinterval-of-parent"


class IntervalViolation(Exception):
    """Base class for every interval-discipline error.

    ``index`` is the offending index (None for interval-level errors),
    ``interval`` the interval involved and ``depth`` the stack depth at the
    time of the violation.
    """

    def __init__(self, message: str, *, index: Optional[int], interval: Optional[Interval],
                 depth: int, label: str = ""):
        self.index = index
        self.interval = interval
        self.depth = depth
        self.label = label
        super().__init__(message)


class InvalidInterval(IntervalViolation):
    pass


class NotSubinterval(IntervalViolation):
    def __init__(self, message: str, *, parent: Interval, **kw):
        self.parent = parent
        super().__init__(message, **kw)


class IndexOutsideInterval(IntervalViolation, IndexError):
    pass


class RawOutOfBounds(IntervalViolation, IndexError):
    pass


class StackUnderflow(IntervalViolation):
    pass


@dataclass
class SortStats:
    comparisons: int = 0
    swaps: int = 0
    reads: int = 0
    writes: int = 0
    max_depth: int = 0
    intervals_generated: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # interval-push, interval-pop, read, write, swap, violation
    i: Optional[int]
    j: Optional[int]
    low: Optional[int]
    high: Optional[int]
    depth: int
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "i": self.i}
        if self.j is not None:
            d["j"] = self.j
        d.update(low=self.low, high=self.high, depth=self.depth, detail=self.detail)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> TraceEvent:
        return cls(d["kind"], d.get("i"), d.get("j"), d.get("low"), d.get("high"),
                   d["depth"], d.get("detail", ""))

    @property
    def touches(self) -> int:
        """Number of element slots touched by this event."""
        if self.kind in ("read", "write"):
            return 1
        if self.kind == "swap":
            return 2
        return 0


class JsonLinesSink:
    """Trace sink writing one JSON object per line to a text stream."""

    def __init__(self, fp: IO[str]):
        self.fp = fp
        self.count = 0

    def __call__(self, event: TraceEvent) -> None:
        self.fp.write(event.to_json())
        self.fp.write("\n")
        self.count += 1


def read_trace(lines: Iterable[str]) -> list[TraceEvent]:
    return [TraceEvent.from_dict(json.loads(line)) for line in lines if line.strip()]


TraceSink = Callable[[TraceEvent], None]


class _Registration:
    __slots__ = ("vector", "interval", "mode", "label")

    def __init__(self, vector, interval, mode, label):
        self.vector = vector
        self.interval = interval
        self.mode = mode
        self.label = label

    def __enter__(self) -> Interval:
        self.vector.push_interval(self.interval, self.mode, label=self.label)
        return self.interval

    def __exit__(self, exc_type, exc, tb) -> None:
        self.vector.pop_interval()


class CheckedVector:
    """Fixed-length integer vector guarded by a stack of active intervals.

    With ``checking=False`` intervals are still tracked (so traces and depth
    counters stay meaningful) but neither validity nor membership is enforced;
    only the raw bounds check remains.  ``strict=True`` makes
    :attr:`Mode.REQUIRE_SUBINTERVAL` the default push mode.

    ``flip_comparison`` is a fault-injection hook: the comparison with that
    zero-based sequence number returns the negated result.
    """

    def __init__(self, elements: Iterable[int] = (), *, checking: bool = True, strict: bool = False,
                 trace: Optional[TraceSink] = None, flip_comparison: Optional[int] = None):
        self._elements = [int(x) for x in elements]
        self._n = len(self._elements)
        self._stack: list[Interval] = []
        self._labels: list[str] = []
        self.stats = SortStats()
        self.trace = trace
        self.checking = checking
        self.default_mode = Mode.REQUIRE_SUBINTERVAL if strict else Mode.REQUIRE_VALID
        self.flip_comparison = flip_comparison

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f"CheckedVector({self._elements!r}, depth={len(self._stack)})"

    def to_list(self) -> list[int]:
        return list(self._elements)

    @property
    def depth(self) -> int:
        return len(self._stack)

    @property
    def active(self) -> Optional[Interval]:
        return self._stack[-1] if self._stack else None

    # -- interval stack ----------------------------------------------------

    def interval(self, i: Interval, mode: Optional[Mode] = None, label: str = "") -> _Registration:
        """Context manager that keeps ``i`` active for the duration of a block."""
        return _Registration(self, i, mode, label)

    def push_interval(self, i: Interval, mode: Optional[Mode] = None, label: str = "") -> None:
        if mode is None:
            mode = self.default_mode
        depth = len(self._stack)
        if self.checking:
            if not is_valid(i, self._n):
                self._violation(InvalidInterval(
                    f"{label or 'push'}: interval {i} is not valid for a vector of length {self._n}",
                    index=None, interval=i, depth=depth, label=label))
            if mode is Mode.REQUIRE_SUBINTERVAL and self._stack:
                parent = self._stack[-1]
                if not subinterval_of(i, parent):
                    self._violation(NotSubinterval(
                        f"{label or 'push'}: interval {i} is not a subinterval of {parent}",
                        parent=parent, index=None, interval=i, depth=depth, label=label))
        self._stack.append(i)
        self._labels.append(label)
        stats = self.stats
        stats.intervals_generated += 1
        if depth + 1 > stats.max_depth:
            stats.max_depth = depth + 1
        if self.trace is not None:
            self.trace(TraceEvent("interval-push", None, None, i.low, i.high, depth + 1, label))

    def pop_interval(self) -> Interval:
        if not self._stack:
            self._violation(StackUnderflow("pop on an empty interval stack",
                                           index=None, interval=None, depth=0))
        i = self._stack.pop()
        label = self._labels.pop()
        if self.trace is not None:
            self.trace(TraceEvent("interval-pop", None, None, i.low, i.high, len(self._stack), label))
        return i

    # -- element access ----------------------------------------------------

    def _check(self, k: int, op: str) -> None:
        if self.checking:
            top = self._stack[-1] if self._stack else None
            if top is None or not top.low <= k <= top.high:
                where = self._labels[-1] if self._labels else ""
                self._violation(IndexOutsideInterval(
                    f"{op} at index {k} outside active interval {top} "
                    f"(depth {len(self._stack)}{', in ' + where if where else ''})",
                    index=k, interval=top, depth=len(self._stack), label=where))
        if not 0 <= k < self._n:
            self._violation(RawOutOfBounds(
                f"{op} at index {k} outside [0..{self._n - 1}]",
                index=k, interval=self.active, depth=len(self._stack)))

    def read(self, k: int) -> int:
        self._check(k, "read")
        self.stats.reads += 1
        if self.trace is not None:
            self._emit("read", k)
        return self._elements[k]

    def write(self, k: int, x: int) -> None:
        self._check(k, "write")
        self._elements[k] = x
        self.stats.writes += 1
        if self.trace is not None:
            self._emit("write", k, detail=str(x))

    def swap(self, i: int, j: int) -> None:
        # both checks before either slot is touched
        self._check(i, "swap")
        self._check(j, "swap")
        e = self._elements
        e[i], e[j] = e[j], e[i]
        self.stats.swaps += 1
        if self.trace is not None:
            self._emit("swap", i, j)

    def compare(self, a: int, b: int, relation: Callable[[int, int], bool]) -> bool:
        seq = self.stats.comparisons
        self.stats.comparisons = seq + 1
        result = bool(relation(a, b))
        if seq == self.flip_comparison:
            result = not result
        return result

    # -- tracing -------------------------------------------------------------

    def _emit(self, kind: str, i: Optional[int], j: Optional[int] = None, detail: str = "") -> None:
        top = self._stack[-1] if self._stack else None
        self.trace(TraceEvent(kind, i, j, top.low if top else None, top.high if top else None,
                              len(self._stack), detail))

    def _violation(self, err: IntervalViolation):
        if self.trace is not None:
            iv = err.interval
            self.trace(TraceEvent("violation", err.index, None,
                                  iv.low if iv else None, iv.high if iv else None,
                                  err.depth, type(err).__name__))
        raise err
