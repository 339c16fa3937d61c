"""Command-line entry point: sort, verify, bench and trace workflows.

Data flows on stdout (or ``--output``); diagnostics and summaries go to
stderr, so sorted output is pipeline-safe.  Exit statuses: 0 success,
1 verification or data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import IO

from .bench import ALGORITHMS, VerificationFailed, emit_csv, run_suite
from .data_io import FORMATS, ParseError, read_list, write_list
from .engine import (
    HOST_BITS,
    CorruptState,
    DuplicateDetected,
    PhaseEvent,
    ValueExceedsUniverse,
    WordSpec,
    sort,
)
from .generators import FAMILIES, DatasetSpec, InfeasibleRange
from .verification import run_all

__all__ = ["main"]

TRACE_WARN_SIZE = 256

_DATA_ERRORS = (
    ParseError,
    ValueExceedsUniverse,
    DuplicateDetected,
    CorruptState,
    InfeasibleRange,
    VerificationFailed,
    OSError,
)


def _word_bits(text: str) -> int:
    value = int(text)
    if not 2 <= value <= HOST_BITS:
        raise argparse.ArgumentTypeError(
            f"word bits must be in [2, {HOST_BITS}], got {value}"
        )
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list: {exc}")


def _family_list(text: str) -> list[str]:
    families = [part for part in text.split(",") if part]
    for fam in families:
        if fam not in FAMILIES:
            raise argparse.ArgumentTypeError(
                f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}"
            )
    return families


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assocsort",
        description="In-place sorting of distinct integers, with verification and benchmarks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_sort = sub.add_parser("sort", help="sort a value list from a file or stdin")
    p_sort.add_argument("--input", default="-", help="input path, '-' for stdin")
    p_sort.add_argument("--output", default="-", help="output path, '-' for stdout")
    p_sort.add_argument("--format", choices=FORMATS, default="text")
    p_sort.add_argument("--word-bits", type=_word_bits, default=HOST_BITS)

    p_verify = sub.add_parser("verify", help="run the self-check suites")
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("bench", help="run benchmark suites and emit CSV")
    p_bench.add_argument("--csv", required=True, help="destination CSV path")
    p_bench.add_argument("--families", type=_family_list, default=list(FAMILIES[:3]))
    p_bench.add_argument("--n", type=_int_list, default=[1024])
    p_bench.add_argument("--beta", type=_int_list, default=[2])
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--word-bits", type=_word_bits, default=HOST_BITS)

    p_trace = sub.add_parser("trace", help="print word-level state after each phase")
    p_trace.add_argument("--input", default="-", help="input path, '-' for stdin")
    p_trace.add_argument("--format", choices=FORMATS, default="text")
    p_trace.add_argument("--word-bits", type=_word_bits, default=HOST_BITS)

    return parser


def _open_input(path: str, fmt: str) -> IO:
    if path == "-":
        return sys.stdin if fmt == "text" else sys.stdin.buffer
    return open(path, "r" if fmt == "text" else "rb")


def _fail(exc: Exception) -> int:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return 1


def _cmd_sort(args: argparse.Namespace) -> int:
    word = WordSpec(args.word_bits)
    try:
        src = _open_input(args.input, args.format)
        try:
            values = read_list(src, args.format, word)
        finally:
            if args.input != "-":
                src.close()
        report = sort(values, word)
        if args.output == "-":
            dest = sys.stdout if args.format == "text" else sys.stdout.buffer
            write_list(values, dest, args.format)
            if args.format == "text":
                sys.stdout.flush()
        else:
            write_list(values, args.output, args.format)
    except _DATA_ERRORS as exc:
        return _fail(exc)
    print(
        f"n={len(values)} passes={report.pass_count} nanos={report.elapsed_ns}",
        file=sys.stderr,
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 0:
        print("error: ValueError: trials must be non-negative", file=sys.stderr)
        return 1
    started = time.perf_counter()
    results = run_all(args.trials, args.seed)
    if not results:
        print("warning: trials=0, no checks run", file=sys.stderr)
        return 0
    all_ok = True
    for res in results:
        total = res.passed + res.failed
        status = "ok" if res.ok else "FAIL"
        print(f"{res.name}: {res.passed}/{total} {status}")
        if not res.ok:
            all_ok = False
            print(f"  first failure: {res.first_failure}")
    print(f"elapsed: {time.perf_counter() - started:.1f}s", file=sys.stderr)
    return 0 if all_ok else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    suite = []
    index = 0
    for family in args.families:
        betas = args.beta if family == "uniform" else [1]
        for n in args.n:
            for beta in betas:
                suite.append(
                    DatasetSpec(
                        family, n, args.word_bits, beta=beta, seed=args.seed + index
                    )
                )
                index += 1
    try:
        records = run_suite(suite, ALGORITHMS, repetitions=args.reps)
        emit_csv(records, args.csv)
    except _DATA_ERRORS as exc:
        return _fail(exc)
    print(f"wrote {len(records)} records to {args.csv}", file=sys.stderr)
    return 0


def _classify(phase: str, rel: int, low: int, tagged: bool, event: PhaseEvent, w: int) -> str:
    tally = event.tally
    region = event.region
    if phase in ("retrieve", "singleton"):
        return "output" if rel < tally.n_d + tally.n_c else "out-of-range"
    if phase in ("store", "partition") and rel < tally.n_d:
        return "record"
    if tagged:
        return "node"
    if low >= region.delta and (low - region.delta) // (w - 1) < region.length:
        return "idle"
    return "out-of-range"


def _trace_hook(word: WordSpec):
    def hook(event: PhaseEvent) -> None:
        tally = event.tally
        region = event.region
        print(
            f"pass {event.pass_index + 1} {event.phase}: offset={region.offset} "
            f"length={region.length} delta={region.delta} "
            f"n_d={tally.n_d} n_c={tally.n_c} n_out={tally.n_d_prime}"
        )
        for rel in range(region.length):
            v = event.data[region.offset + rel]
            tagged = bool(v & word.tag_mask)
            low = v & word.value_mask
            cls = _classify(event.phase, rel, low, tagged, event, word.w)
            print(f"  [{region.offset + rel}] tag={int(tagged)} low={low} {cls}")

    return hook


def _cmd_trace(args: argparse.Namespace) -> int:
    word = WordSpec(args.word_bits)
    try:
        src = _open_input(args.input, args.format)
        try:
            values = read_list(src, args.format, word)
        finally:
            if args.input != "-":
                src.close()
        if len(values) > TRACE_WARN_SIZE:
            print(
                f"warning: tracing {len(values)} words prints "
                f"{len(values)}+ lines per phase",
                file=sys.stderr,
            )
        sort(values, word, hook=_trace_hook(word))
    except _DATA_ERRORS as exc:
        return _fail(exc)
    print(f"sorted {len(values)} values", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.subcommand == "sort":
        return _cmd_sort(args)
    if args.subcommand == "verify":
        return _cmd_verify(args)
    if args.subcommand == "bench":
        return _cmd_bench(args)
    return _cmd_trace(args)


if __name__ == "__main__":
    sys.exit(main())
