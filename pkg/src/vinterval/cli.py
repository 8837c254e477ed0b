"""Command-line front end: ``sort``, ``trace``, ``bench`` and ``verify``.

Exit codes: 0 ok, 1 usage, 2 interval violation or property failure,
3 I/O error, 4 input precondition (malformed integers, negatives for radix).
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from dataclasses import dataclass, field
from typing import IO, Iterator, Optional, Sequence

from . import SORTS
from .checked import CheckedVector, IntervalViolation, JsonLinesSink
from .radixsort import NegativeElement
from .verify import make_input, run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_IO = 3
EXIT_PRECONDITION = 4

PATTERNS = ("random", "sorted", "reverse", "equal")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algorithm: str = "quick"
    input: str = "-"
    output: str = "-"
    trace: Optional[str] = None
    stats: bool = False
    strict_subinterval: bool = False
    seed: int = 0
    sizes: list[int] = field(default_factory=list)
    pattern: str = "random"
    runs: int = 1000
    inject_fault: Optional[int] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    if not sizes or any(n < 0 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be a non-empty list of non-negative counts")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vinterval", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    algo = dict(choices=sorted(SORTS), required=True)

    p = sub.add_parser("sort", help="sort a file of integers")
    p.add_argument("--algo", dest="algorithm", **algo)
    p.add_argument("--input", required=True, help="input file, '-' for stdin")
    p.add_argument("--output", default="-", help="output file, '-' for stdout")
    p.add_argument("--trace", help="write a JSON-lines access trace here")
    p.add_argument("--stats", action="store_true", help="print counters to stderr")
    p.add_argument("--strict", dest="strict_subinterval", action="store_true",
                   help="require every interval to nest inside its parent")

    p = sub.add_parser("trace", help="sort a file and write only its trace")
    p.add_argument("--algo", dest="algorithm", **algo)
    p.add_argument("--input", required=True)
    p.add_argument("--output", default="-", help="trace destination, '-' for stdout")
    p.add_argument("--strict", dest="strict_subinterval", action="store_true")

    p = sub.add_parser("bench", help="count operations over growing input sizes")
    p.add_argument("--algo", dest="algorithm", **algo)
    p.add_argument("--pattern", choices=PATTERNS, default="random")
    p.add_argument("--sizes", type=_sizes, required=True, help="comma-separated, e.g. 128,256,512")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", dest="strict_subinterval", action="store_true")

    p = sub.add_parser("verify", help="run the randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--strict", dest="strict_subinterval", action="store_true",
                   help="also run radixsort with subinterval checking (quicksort always is)")
    p.add_argument("--inject-fault", type=int, default=None, help=argparse.SUPPRESS)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**vars(ns))


@contextlib.contextmanager
def _open(path: str, mode: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin if "r" in mode else sys.stdout
    else:
        with open(path, mode, encoding="utf-8") as fp:
            yield fp


def read_integers(path: str) -> list[int]:
    with _open(path, "r") as fp:
        text = fp.read()
    values = []
    for tok in text.split():
        try:
            values.append(int(tok, 10))
        except ValueError:
            raise InputError(f"not a base-10 integer: {tok!r}")
    return values


def _run_sort(cfg: RunConfig, values: list[int], trace_fp: Optional[IO[str]]) -> CheckedVector:
    if cfg.algorithm == "radix":
        bad = next((x for x in values if x < 0), None)
        if bad is not None:
            raise InputError(f"radixsort needs non-negative integers, got {bad}")
    sink = JsonLinesSink(trace_fp) if trace_fp is not None else None
    v = CheckedVector(values, strict=cfg.strict_subinterval, trace=sink)
    SORTS[cfg.algorithm](v)
    return v


def _guarded(fn):
    def wrapper(cfg: RunConfig) -> int:
        try:
            return fn(cfg)
        except IntervalViolation as exc:
            print(f"interval violation: {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_VIOLATION
        except (InputError, NegativeElement) as exc:
            print(f"bad input: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        except OSError as exc:
            print(f"I/O error: {exc}", file=sys.stderr)
            return EXIT_IO
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_guarded
def cmd_sort(cfg: RunConfig) -> int:
    values = read_integers(cfg.input)
    with contextlib.ExitStack() as stack:
        trace_fp = stack.enter_context(_open(cfg.trace, "w")) if cfg.trace else None
        v = _run_sort(cfg, values, trace_fp)
    with _open(cfg.output, "w") as out:
        for x in v.to_list():
            out.write(f"{x}\n")
    if cfg.stats:
        s = v.stats
        print(f"algo={cfg.algorithm} n={len(v)} comparisons={s.comparisons} swaps={s.swaps} "
              f"reads={s.reads} writes={s.writes} max_depth={s.max_depth} "
              f"intervals={s.intervals_generated}", file=sys.stderr)
    return EXIT_OK


@_guarded
def cmd_trace(cfg: RunConfig) -> int:
    values = read_integers(cfg.input)
    with _open(cfg.output, "w") as fp:
        _run_sort(cfg, values, fp)
    return EXIT_OK


@dataclass
class BenchRow:
    algorithm: str
    pattern: str
    n: int
    comparisons: int
    swaps: int
    reads: int
    writes: int
    max_depth: int
    intervals: int
    passes: Optional[int]
    ratio: Optional[float]


def bench_rows(cfg: RunConfig) -> list[BenchRow]:
    rows: list[BenchRow] = []
    prev = None
    for n in cfg.sizes:
        v = CheckedVector(make_input(cfg.pattern, n, cfg.seed), strict=cfg.strict_subinterval)
        result = SORTS[cfg.algorithm](v)
        s = v.stats
        ratio = s.comparisons / prev if prev else None
        rows.append(BenchRow(cfg.algorithm, cfg.pattern, n, s.comparisons, s.swaps, s.reads,
                             s.writes, s.max_depth, s.intervals_generated,
                             result if cfg.algorithm == "radix" else None, ratio))
        prev = s.comparisons
    return rows


@_guarded
def cmd_bench(cfg: RunConfig) -> int:
    if not cfg.sizes:
        print("bench needs at least one size", file=sys.stderr)
        return EXIT_USAGE
    header = f"{'algo':<6}{'pattern':<9}{'n':>7}{'comparisons':>13}{'swaps':>9}{'reads':>10}" \
             f"{'writes':>9}{'depth':>7}{'intervals':>11}{'passes':>8}{'ratio':>8}"
    print(header)
    for r in bench_rows(cfg):
        passes = "-" if r.passes is None else str(r.passes)
        ratio = "-" if r.ratio is None else f"{r.ratio:.3f}"
        print(f"{r.algorithm:<6}{r.pattern:<9}{r.n:>7}{r.comparisons:>13}{r.swaps:>9}{r.reads:>10}"
              f"{r.writes:>9}{r.max_depth:>7}{r.intervals:>11}{passes:>8}{ratio:>8}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    results = run_all(seed=cfg.seed, runs=cfg.runs, strict=cfg.strict_subinterval,
                      flip_comparison=cfg.inject_fault)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} properties passed")
    return EXIT_OK if failed == 0 else EXIT_VIOLATION


COMMANDS = {"sort": cmd_sort, "trace": cmd_trace, "bench": cmd_bench, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_config(argv)
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
