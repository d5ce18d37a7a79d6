"""Benchmark: derivative-free series recurrence vs. symbolic differentiation.

Wall time alone understates why the differentiation route loses: its cost
lives in the growth of the closed-form coefficients. So alongside timings
this module reports the peak bit-length of the numerators/denominators
each method carries, measured over every intermediate it produces.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from fibsum.series import fib_series_values
from fibsum.symbolic import RationalFunction, baseline_series_closed_forms

__all__ = [
    "MethodStats",
    "BenchReport",
    "rational_bits",
    "closed_form_bits",
    "run_bench",
    "baseline_bit_growth",
]


def rational_bits(q: Fraction) -> int:
    """Peak bit-length across numerator and denominator."""
    return max(q.numerator.bit_length(), q.denominator.bit_length())


def closed_form_bits(f: RationalFunction) -> int:
    """Peak coefficient bit-length across a closed form's two polynomials."""
    coeffs = f.num.coeffs + f.den.coeffs
    return max((rational_bits(c) for c in coeffs), default=0)


@dataclass(frozen=True)
class MethodStats:
    method: str
    value: Fraction
    elapsed_ms: float
    peak_bits: int


@dataclass(frozen=True)
class BenchReport:
    m: int
    x: Fraction
    recurrence: MethodStats
    baseline: MethodStats

    @property
    def values_equal(self) -> bool:
        return self.recurrence.value == self.baseline.value


def run_bench(m: int, x: Fraction | int) -> BenchReport:
    """Time both series methods at (m, x) and compare their exact values."""
    x = Fraction(x)

    start = time.perf_counter()
    series_values = fib_series_values(m, x)
    recurrence_ms = (time.perf_counter() - start) * 1000.0
    recurrence = MethodStats(
        method="recurrence",
        value=series_values[-1],
        elapsed_ms=recurrence_ms,
        peak_bits=max(rational_bits(v) for v in series_values),
    )

    start = time.perf_counter()
    forms = baseline_series_closed_forms(m)
    value = forms[-1].evaluate(x)
    baseline_ms = (time.perf_counter() - start) * 1000.0
    baseline = MethodStats(
        method="baseline",
        value=value,
        elapsed_ms=baseline_ms,
        peak_bits=max(closed_form_bits(f) for f in forms),
    )

    return BenchReport(m=m, x=x, recurrence=recurrence, baseline=baseline)


def baseline_bit_growth(powers: Iterable[int]) -> dict[int, int]:
    """Peak coefficient bits of the differentiation closed form, per power.

    One differentiation chain up to max(powers) serves all entries; the
    closed forms do not depend on any evaluation point.
    """
    wanted: Sequence[int] = sorted(set(powers))
    if not wanted:
        return {}
    if wanted[0] < 0:
        raise ValueError(f"powers must be >= 0, got {wanted[0]}")
    forms = baseline_series_closed_forms(wanted[-1])
    peak = 0
    profile: dict[int, int] = {}
    targets = set(wanted)
    for j, form in enumerate(forms):
        peak = max(peak, closed_form_bits(form))
        if j in targets:
            profile[j] = peak
    return profile
