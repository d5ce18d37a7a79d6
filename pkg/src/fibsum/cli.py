"""Command-line front end.

Subcommands
    fib         one Fibonacci number
    finite      sum_{r=1..n} r^m F(r) x^r by a chosen method
    series      sum_{r>=1} r^m F(r) x^r (recurrence or differentiation baseline)
    geometric   sum_{r>=1} r^m x^r
    identities  cross-validate every evaluation route on a fixed grid
    bench       time recurrence vs. baseline at one (m, x) and compare values

Exact values print as "p/q"; x is accepted only as an exact rational
literal ("2", "-7/4"), never as a decimal. Exit codes: 0 success, 1
domain/computation error (including any identities mismatch), 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from fibsum.bench import run_bench
from fibsum.exact import FibSequence, fib, parse_rational, to_decimal
from fibsum.finite import (
    FINITE_METHODS,
    FiniteSumQuery,
    Identity,
    closed_identity,
    direct_sum,
    fib_geometric_partial,
    recurrence_sum,
    telescoped_sum,
)
from fibsum.series import SERIES_METHODS, SeriesQuery, geometric_series_sum
from fibsum.symbolic import PoleError

__all__ = ["build_parser", "main", "console_entry"]

# Base JSON keys emitted by every command, in output order.
_BASE_KEYS = ("command", "m", "n", "x", "method", "exact", "decimal", "elapsed_ms")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_digits(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("digits must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsum",
        description="Exact power-weighted Fibonacci sums and series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--digits", type=_positive_digits, default=12,
                       help="significant digits in the decimal rendering (default 12)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("fib", help="Fibonacci number F(n), n >= -1")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(handler=_cmd_fib)

    p = sub.add_parser("finite", help="finite sum of r^m F(r) x^r for r = 1..n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_rational, required=True,
                   help='exact rational, e.g. "1", "-7/4"')
    p.add_argument("--method", choices=FINITE_METHODS, default="auto")
    add_common(p)
    p.set_defaults(handler=_cmd_finite)

    p = sub.add_parser("series", help="infinite series of r^m F(r) x^r, |x| < 1/phi")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--method", choices=SERIES_METHODS, default="auto")
    add_common(p)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("geometric", help="infinite series of r^m x^r, |x| < 1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=_rational, required=True)
    add_common(p)
    p.set_defaults(handler=_cmd_geometric)

    p = sub.add_parser("identities",
                       help="cross-validate all evaluation routes on a fixed grid")
    add_common(p)
    p.set_defaults(handler=_cmd_identities)

    p = sub.add_parser("bench",
                       help="time series recurrence vs. differentiation baseline")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=_rational, required=True)
    add_common(p)
    p.set_defaults(handler=_cmd_bench)

    return parser


def _payload(command: str, *, m=None, n=None, x=None, method=None,
             value=None, digits=12, elapsed_ms=None) -> dict:
    return {
        "command": command,
        "m": m,
        "n": n,
        "x": None if x is None else str(Fraction(x)),
        "method": method,
        "exact": None if value is None else str(value),
        "decimal": None if value is None else to_decimal(value, digits),
        "elapsed_ms": elapsed_ms,
    }


def _cmd_fib(args) -> tuple[dict, int]:
    start = time.perf_counter()
    value = fib(args.n)
    elapsed = (time.perf_counter() - start) * 1000.0
    return _payload("fib", n=args.n, value=value, digits=args.digits,
                    elapsed_ms=round(elapsed, 3)), 0


def _cmd_finite(args) -> tuple[dict, int]:
    query = FiniteSumQuery(args.m, args.n, args.x)
    method = "recurrence" if args.method == "auto" else args.method
    start = time.perf_counter()
    value = query.evaluate(method)
    elapsed = (time.perf_counter() - start) * 1000.0
    return _payload("finite", m=args.m, n=args.n, x=args.x, method=method,
                    value=value, digits=args.digits,
                    elapsed_ms=round(elapsed, 3)), 0


def _cmd_series(args) -> tuple[dict, int]:
    query = SeriesQuery(args.m, args.x)
    method = "recurrence" if args.method == "auto" else args.method
    start = time.perf_counter()
    value = query.evaluate(method)
    elapsed = (time.perf_counter() - start) * 1000.0
    return _payload("series", m=args.m, x=args.x, method=method,
                    value=value, digits=args.digits,
                    elapsed_ms=round(elapsed, 3)), 0


def _cmd_geometric(args) -> tuple[dict, int]:
    query = SeriesQuery(args.m, args.x)
    start = time.perf_counter()
    value = geometric_series_sum(query.m, query.x)
    elapsed = (time.perf_counter() - start) * 1000.0
    return _payload("geometric", m=args.m, x=args.x, method="recurrence",
                    value=value, digits=args.digits,
                    elapsed_ms=round(elapsed, 3)), 0


_GRID_XS = tuple(
    Fraction(*pair) for pair in
    ((1, 1), (-1, 1), (1, 2), (-1, 3), (2, 1), (5, 7), (-7, 4))
)


def _identity_failures():
    """Yield (total_so_far, failure_description_or_None) over the whole grid."""
    total = 0
    # Binomial recurrence vs. brute force.
    for m in range(0, 9):
        for n in range(0, 41):
            for x in _GRID_XS:
                total += 1
                if recurrence_sum(m, n, x) != direct_sum(m, n, x):
                    yield total, f"recurrence_sum(m={m}, n={n}, x={x}) != direct_sum"
    # Telescoped rearrangement vs. brute force (m >= 1 only).
    for m in range(1, 9):
        for n in range(0, 41):
            for x in _GRID_XS:
                total += 1
                if telescoped_sum(m, n, x) != direct_sum(m, n, x):
                    yield total, f"telescoped_sum(m={m}, n={n}, x={x}) != direct_sum"
    # Closed partial-sum formula vs. direct partial sums.
    for x in _GRID_XS:
        fibs = FibSequence()
        for n in range(0, 31):
            direct_tail = Fraction(0)
            for k in range(n, -1, -1):
                direct_tail += fibs[k] * x**k
                total += 1
                if fib_geometric_partial(k, n, x) != direct_tail:
                    yield total, f"fib_geometric_partial(k={k}, n={n}, x={x})"
    # Closed-form identity catalog vs. direct sums.
    checks = {
        Identity.SUM_F: lambda n: direct_sum(0, n - 1, Fraction(1)),
        Identity.SUM_RF: lambda n: direct_sum(1, n, Fraction(1)),
        Identity.SUM_R2F: lambda n: direct_sum(2, n, Fraction(1)),
        Identity.ALT_F: lambda n: direct_sum(0, n - 1, Fraction(-1)),
        Identity.ALT_RF: lambda n: direct_sum(1, n, Fraction(-1)),
    }
    for ident, oracle in checks.items():
        for n in range(1, 101):
            total += 1
            if closed_identity(ident, n) != oracle(n):
                yield total, f"closed_identity({ident.name}, n={n})"
    yield total, None


def _cmd_identities(args) -> tuple[dict, int]:
    start = time.perf_counter()
    cases_total = 0
    cases_failed = 0
    first_failure = None
    for seen, failure in _identity_failures():
        cases_total = seen
        if failure is not None:
            cases_failed += 1
            if first_failure is None:
                first_failure = failure
    elapsed = (time.perf_counter() - start) * 1000.0
    payload = _payload("identities", elapsed_ms=round(elapsed, 3))
    payload["cases_total"] = cases_total
    payload["cases_failed"] = cases_failed
    payload["first_failure"] = first_failure
    return payload, (1 if cases_failed else 0)


def _cmd_bench(args) -> tuple[dict, int]:
    start = time.perf_counter()
    report = run_bench(args.m, args.x)
    elapsed = (time.perf_counter() - start) * 1000.0
    payload = _payload("bench", m=args.m, x=args.x, method="recurrence",
                       value=report.recurrence.value, digits=args.digits,
                       elapsed_ms=round(elapsed, 3))
    payload["recurrence_ms"] = round(report.recurrence.elapsed_ms, 3)
    payload["baseline_ms"] = round(report.baseline.elapsed_ms, 3)
    payload["recurrence_peak_bits"] = report.recurrence.peak_bits
    payload["baseline_peak_bits"] = report.baseline.peak_bits
    payload["values_equal"] = report.values_equal
    return payload, (0 if report.values_equal else 1)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload))
        return
    for key, value in payload.items():
        if value is None:
            continue
        print(f"{key} {value}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "finite" and args.method == "telescope" and args.m == 0:
        parser.error("--method telescope requires --m >= 1")
    try:
        payload, status = args.handler(args)
    except (PoleError, ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.format)
    return status


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    sys.exit(main())
