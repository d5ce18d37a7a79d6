"""Exact evaluation of power-weighted Fibonacci sums and series.

Everything is computed over arbitrary-precision rationals, by several
independent routes that are cross-checked to exact equality: brute-force
summation, closed-form recurrences over lower powers, and a symbolic
differentiation baseline built on a small polynomial kernel.
"""

from fibsum.bench import BenchReport, MethodStats, baseline_bit_growth, run_bench
from fibsum.exact import FibSequence, binomial, fib, parse_rational, to_decimal
from fibsum.finite import (
    FiniteSumQuery,
    Identity,
    closed_identity,
    direct_sum,
    fib_geometric_partial,
    recurrence_sum,
    telescoped_sum,
)
from fibsum.series import (
    DivergenceError,
    SeriesQuery,
    fib_series_sum,
    fib_series_values,
    geometric_series_sum,
    geometric_series_values,
    in_convergence_domain,
    truncated_sum,
)
from fibsum.symbolic import (
    PoleError,
    Polynomial,
    RationalFunction,
    apply_D,
    baseline_series_closed_form,
    baseline_series_closed_forms,
    fib_generating_function,
    polynomial_gcd,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "DivergenceError",
    "FibSequence",
    "FiniteSumQuery",
    "Identity",
    "MethodStats",
    "PoleError",
    "Polynomial",
    "RationalFunction",
    "SeriesQuery",
    "apply_D",
    "baseline_bit_growth",
    "baseline_series_closed_form",
    "baseline_series_closed_forms",
    "binomial",
    "closed_identity",
    "direct_sum",
    "fib",
    "fib_generating_function",
    "fib_geometric_partial",
    "fib_series_sum",
    "fib_series_values",
    "geometric_series_sum",
    "geometric_series_values",
    "in_convergence_domain",
    "parse_rational",
    "polynomial_gcd",
    "recurrence_sum",
    "run_bench",
    "telescoped_sum",
    "to_decimal",
    "truncated_sum",
]
