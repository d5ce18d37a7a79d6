"""Infinite power-weighted series, evaluated without differentiation.

The Fibonacci series sum_{r>=1} r**m * F(r) * x**r converges exactly when
|x| < 1/phi, phi the golden ratio. The membership test and the summation
are both exact: 1/phi never appears as a number, and the sum is produced
by a derivative-free recurrence seeded with x/(1 - x - x**2), which is the
limit of the finite recurrence as the boundary term dies off.

The same scheme with F(r) dropped handles the power-weighted geometric
series sum_{r>=1} r**m * x**r on |x| < 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from fibsum.exact import binomial
from fibsum.finite import direct_sum

__all__ = [
    "SeriesQuery",
    "DivergenceError",
    "SERIES_METHODS",
    "in_convergence_domain",
    "fib_series_values",
    "fib_series_sum",
    "geometric_series_values",
    "geometric_series_sum",
    "truncated_sum",
]

SERIES_METHODS = ("auto", "recurrence", "baseline")


class DivergenceError(ValueError):
    """Raised when a series is evaluated outside its convergence interval."""


@dataclass(frozen=True)
class SeriesQuery:
    """One series request: power m >= 0 and rational evaluation point x."""

    m: int
    x: Fraction

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"power m must be >= 0, got {self.m}")
        object.__setattr__(self, "x", Fraction(self.x))

    def evaluate(self, method: str = "auto") -> Fraction:
        """Evaluate by "recurrence" (default) or the differentiation "baseline"."""
        if method in ("auto", "recurrence"):
            return fib_series_sum(self.m, self.x)
        if method == "baseline":
            # Imported here so the symbolic kernel stays optional at runtime.
            from fibsum.symbolic import baseline_series_closed_form

            if not in_convergence_domain(self.x):
                raise DivergenceError(_divergence_message(self.x))
            return baseline_series_closed_form(self.m).evaluate(self.x)
        raise ValueError(f"unknown series method: {method!r}")


def in_convergence_domain(x: Fraction | int) -> bool:
    """Exact test for |x| < 1/phi.

    |x| < (sqrt(5) - 1)/2 is equivalent to the rational inequality
    x**2 + |x| < 1, so the golden ratio never has to be approximated and
    points within 1e-80 of the boundary still classify correctly.
    """
    x = Fraction(x)
    return x * x + abs(x) < 1


def _divergence_message(x: Fraction) -> str:
    return (
        f"series diverges at x = {x}: requires |x| < 1/phi "
        "(equivalently x**2 + |x| < 1)"
    )


def fib_series_values(m: int, x: Fraction | int) -> list[Fraction]:
    """Sums of the r**j-weighted Fibonacci series for every j = 0..m.

    Seeds with x/(1 - x - x**2) and climbs powers with the binomial
    recurrence

        S(j) = [ sum_{i=1..j} C(j,i) * (-1)**(i+1) * S(j-i)
                 + x**2 * sum_{i=1..j} C(j,i) * S(j-i) ] / (1 - x - x**2),

    keeping the two accumulations separate rather than folding the weights
    together. No derivatives are taken anywhere.
    """
    query = SeriesQuery(m, Fraction(x))
    if not in_convergence_domain(query.x):
        raise DivergenceError(_divergence_message(query.x))
    x = query.x
    base = 1 - x - x * x
    x_sq = x * x
    values = [x / base]
    for j in range(1, query.m + 1):
        signed = Fraction(0)
        plain = Fraction(0)
        for i in range(1, j + 1):
            weight = binomial(j, i)
            term = weight * values[j - i]
            signed += term if i & 1 else -term
            plain += weight * values[j - i]
        values.append((signed + x_sq * plain) / base)
    return values


def fib_series_sum(m: int, x: Fraction | int) -> Fraction:
    """Exact value of sum_{r>=1} r**m * F(r) * x**r for |x| < 1/phi."""
    return fib_series_values(m, x)[-1]


def geometric_series_values(m: int, x: Fraction | int) -> list[Fraction]:
    """Sums of the r**j-weighted geometric series for j = 0..m, |x| < 1."""
    query = SeriesQuery(m, Fraction(x))
    x = query.x
    if abs(x) >= 1:
        raise DivergenceError(
            f"geometric series diverges at x = {x}: requires |x| < 1"
        )
    base = 1 - x
    values = [x / base]
    for j in range(1, query.m + 1):
        signed = Fraction(0)
        for i in range(1, j + 1):
            term = binomial(j, i) * values[j - i]
            signed += term if i & 1 else -term
        values.append(signed / base)
    return values


def geometric_series_sum(m: int, x: Fraction | int) -> Fraction:
    """Exact value of sum_{r>=1} r**m * x**r for |x| < 1."""
    return geometric_series_values(m, x)[-1]


def truncated_sum(m: int, x: Fraction | int, terms: int) -> Fraction:
    """Exact partial sum of the first `terms` series terms (numerical check).

    Converges fast inside the domain (the terms decay geometrically), so a
    few hundred terms pin the series value to dozens of digits.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    return direct_sum(m, terms, Fraction(x))
