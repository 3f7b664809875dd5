"""Command-line surface: ``subseqbounds {count,bounds,sweep,trace,gap,verify}``.

Exit status is 0 on success, 1 when a verification fails and 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional

from subseqbounds.bounds import bounds_report
from subseqbounds.exact import ORACLE_MAX_LENGTH, count_subsequences, enumerate_subsequences
from subseqbounds.patterns import pattern_gap_report
from subseqbounds.runstring import RunString, parse_string
from subseqbounds.suites import (
    DEFAULT_MAX_N,
    DEFAULT_RANDOM_SAMPLES,
    DEFAULT_SEED,
    SUITES,
    run_suite,
)
from subseqbounds.sweep import check_sweep, sweep_rows, write_csv
from subseqbounds.transforms import (
    TransformTrace,
    balance_trace,
    flip_trace,
    unbalance_trace,
    verify_monotone,
)
from subseqbounds.unbalanced import lower_gap_report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TRACES: Dict[str, Callable[[RunString, int], TransformTrace]] = {
    "balance": balance_trace,
    "unbalance": unbalance_trace,
    "flip": flip_trace,
}


def _add_string_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--bits", help="binary string, e.g. 0011")
    group.add_argument("--runs", help="first bit and run lengths, e.g. 0:3,7,2,1,2")


def _string_from(args: argparse.Namespace) -> Optional[RunString]:
    if args.bits is not None:
        return RunString.from_bits(args.bits)
    if args.runs is not None:
        return parse_string(args.runs)
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subseqbounds",
        description="Count and bound the distinct subsequences of binary strings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exact |D_t(X)|")
    _add_string_args(count)
    count.add_argument("--t", type=int, required=True, help="number of deletions")
    count.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    count.add_argument("--oracle-cap", type=int, default=ORACLE_MAX_LENGTH)

    bounds = sub.add_parser("bounds", help="every bound for (n, r, t)")
    bounds.add_argument("--n", type=int)
    bounds.add_argument("--r", type=int)
    bounds.add_argument("--t", type=int, required=True)
    _add_string_args(bounds, required=False)
    bounds.add_argument("--save", help="write the report as JSON")

    sweep = sub.add_parser("sweep", help="CSV of all bounds for t = 0..n")
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--r", type=int, required=True)
    sweep.add_argument("--k", type=int, help="run length of the balanced bound string")
    sweep.add_argument("--exact", help="string whose exact counts fill the exact column")
    sweep.add_argument("--out", default="-", help="output path, - for stdout")
    sweep.add_argument("--check", action="store_true", help="fail if an ordering is violated")
    sweep.add_argument("--verbose", action="store_true")

    trace = sub.add_parser("trace", help="balancing, unbalancing or flip trace")
    trace.add_argument("kind", choices=sorted(TRACES))
    _add_string_args(trace)
    trace.add_argument("--t", type=int, required=True)
    trace.add_argument("--save", help="write the trace as JSON")

    gap = sub.add_parser("gap", help="how far the new bounds sit from the old ones")
    gap.add_argument("which", choices=["lower", "patterns"])
    gap.add_argument("--n", type=int, help="string length (lower)")
    gap.add_argument("--r", type=int, required=True)
    gap.add_argument("--k", type=int, help="run length (patterns)")
    gap.add_argument("--t", type=int, required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITES.names + ["all"])
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    verify.add_argument("--samples", type=int, default=DEFAULT_RANDOM_SAMPLES)
    verify.add_argument("--verbose", action="store_true")
    return parser


def cmd_count(args: argparse.Namespace) -> int:
    x = _string_from(args)
    assert x is not None
    value = count_subsequences(x, args.t)
    print(value)
    if args.oracle:
        oracle = len(enumerate_subsequences(x, args.t, max_length=args.oracle_cap))
        if oracle != value:
            print(f"oracle disagrees: {oracle}", file=sys.stderr)
            return EXIT_FAILED
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    x = _string_from(args)
    n = args.n if args.n is not None else (x.length if x else None)
    r = args.r if args.r is not None else (x.num_runs if x else None)
    if n is None or r is None:
        raise ValueError("give --n and --r, or a string with --bits/--runs")
    report = bounds_report(n, r, args.t, x)
    report.report()
    if args.save:
        report.save(args.save)
    return EXIT_FAILED if report.violations() else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    x = parse_string(args.exact) if args.exact else None
    rows = sweep_rows(args.n, args.r, k=args.k, x=x, verbose=args.verbose)
    write_csv(rows, args.out)
    if args.check:
        problems = check_sweep(rows, args.n, args.r)
        for problem in problems:
            print(problem, file=sys.stderr)
        if problems:
            return EXIT_FAILED
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    x = _string_from(args)
    assert x is not None
    trace = TRACES[args.kind](x, args.t)
    trace.report()
    if args.save:
        trace.save(args.save)
    verdict = verify_monotone(trace)
    if not verdict.ok:
        print(verdict.message, file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_gap(args: argparse.Namespace) -> int:
    if args.which == "lower":
        if args.n is None:
            raise ValueError("gap lower needs --n")
        lower_gap_report(args.n, args.r, args.t).report()
    else:
        if args.k is None:
            raise ValueError("gap patterns needs --k")
        pattern_gap_report(args.r, args.k, args.t).report()
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = SUITES.names if args.suite == "all" else [args.suite]
    status = EXIT_OK
    for name in names:
        result = run_suite(
            name, seed=args.seed, max_n=args.max_n, samples=args.samples, verbose=args.verbose
        )
        result.report()
        if not result.ok:
            status = EXIT_FAILED
    return status


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "count": cmd_count,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
    "trace": cmd_trace,
    "gap": cmd_gap,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
