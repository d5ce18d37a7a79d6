"""Finite power-weighted Fibonacci sums, sum_{r=1..n} r**m * F(r) * x**r.

Three independent evaluation routes plus a catalog of closed-form
identities:

* :func:`direct_sum` - literal term-by-term evaluation, the oracle.
* :func:`telescoped_sum` - one-pass rearrangement with power-difference
  weights r**m - (r-1)**m against closed geometric tails (m >= 1).
* :func:`recurrence_sum` - binomial recurrence over lower powers at upper
  limits n and n-1, evaluated by a triangular dynamic-programming table.
* :func:`fib_geometric_partial` - the closed form of the unweighted
  partial sum sum_{r=k..n} F(r) * x**r that all of the above bottom out in.

The divisor 1 - x - x**2 is never zero for rational x (its roots are
irrational), so none of these paths needs a singularity check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from fibsum.exact import FibSequence, binomial, fib

__all__ = [
    "FiniteSumQuery",
    "Identity",
    "FINITE_METHODS",
    "direct_sum",
    "fib_geometric_partial",
    "telescoped_sum",
    "recurrence_sum",
    "closed_identity",
]

FINITE_METHODS = ("auto", "direct", "telescope", "recurrence")


@dataclass(frozen=True)
class FiniteSumQuery:
    """One finite-sum request: power m >= 0, upper limit n >= 0, rational x."""

    m: int
    n: int
    x: Fraction

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"power m must be >= 0, got {self.m}")
        if self.n < 0:
            raise ValueError(f"upper limit n must be >= 0, got {self.n}")
        object.__setattr__(self, "x", Fraction(self.x))

    def evaluate(self, method: str = "auto") -> Fraction:
        """Evaluate this sum by the named method ("auto" picks the recurrence)."""
        if method in ("auto", "recurrence"):
            return recurrence_sum(self.m, self.n, self.x)
        if method == "direct":
            return direct_sum(self.m, self.n, self.x)
        if method == "telescope":
            return telescoped_sum(self.m, self.n, self.x)
        raise ValueError(f"unknown finite-sum method: {method!r}")


def direct_sum(m: int, n: int, x: Fraction | int) -> Fraction:
    """Brute-force sum_{r=1..n} r**m * F(r) * x**r; the reference oracle."""
    query = FiniteSumQuery(m, n, Fraction(x))
    fibs = FibSequence()
    total = Fraction(0)
    x_pow = Fraction(1)
    for r in range(1, query.n + 1):
        x_pow *= query.x
        total += r**query.m * fibs[r] * x_pow
    return total


def fib_geometric_partial(
    k: int, n: int, x: Fraction | int, _fibs: FibSequence | None = None
) -> Fraction:
    """Closed form of sum_{r=k..n} F(r) * x**r for 0 <= k <= n.

    Equals (F(k)x**k + F(k-1)x**(k+1) - F(n+1)x**(n+1) - F(n)x**(n+2))
    divided by (1 - x - x**2); the k = 0 case is what forces the F(-1)
    extension in :mod:`fibsum.exact`.
    """
    if k < 0 or n < k:
        raise ValueError(f"limits must satisfy 0 <= k <= n, got k={k}, n={n}")
    x = Fraction(x)
    fibs = _fibs if _fibs is not None else FibSequence()
    head = fibs[k] * x**k + fibs[k - 1] * x ** (k + 1)
    tail = fibs[n + 1] * x ** (n + 1) + fibs[n] * x ** (n + 2)
    return (head - tail) / (1 - x - x * x)


def telescoped_sum(m: int, n: int, x: Fraction | int) -> Fraction:
    """Single-pass rearranged evaluation for m >= 1.

    Sums (r**m - (r-1)**m) * (F(r)x**r + F(r-1)x**(r+1)) over r = 1..n,
    subtracts the boundary n**m * (F(n+1)x**(n+1) + F(n)x**(n+2)), and
    divides by 1 - x - x**2. For m = 0 all the power differences vanish
    and the rearrangement breaks down; use fib_geometric_partial(1, n, x).
    """
    query = FiniteSumQuery(m, n, Fraction(x))
    if query.m == 0:
        raise ValueError(
            "telescoped_sum requires m >= 1; for m = 0 use fib_geometric_partial(1, n, x)"
        )
    m, n, x = query.m, query.n, query.x
    fibs = FibSequence()
    acc = Fraction(0)
    x_pow = Fraction(1)  # x**r within the loop
    for r in range(1, n + 1):
        x_pow *= x
        acc += (r**m - (r - 1) ** m) * (fibs[r] * x_pow + fibs[r - 1] * x_pow * x)
    acc -= n**m * (fibs[n + 1] * x ** (n + 1) + fibs[n] * x ** (n + 2))
    return acc / (1 - x - x * x)


def recurrence_sum(m: int, n: int, x: Fraction | int) -> Fraction:
    """Evaluate the sum through the binomial recurrence over lower powers.

    The sum with power j at limit u is a signed binomial combination of
    the sums with powers j-1, ..., 0 at limits u and u-1, plus a boundary
    term, all divided by 1 - x - x**2:

        S(j, u) = [ sum_{i=1..j} C(j,i) * (-1)**(i+1) * S(j-i, u)
                    + x**2 * sum_{i=1..j} C(j,i) * S(j-i, u-1)
                    - u**j * (F(u+1)x**(u+1) + F(u)x**(u+2)) ] / (1 - x - x**2)

    Naive recursion would re-derive limits n-2, n-3, ... exponentially
    often, so row j is tabulated at limits max(0, n-m+j)..n; each row then
    only reads the two limits the formula names. Row 0 is closed by
    fib_geometric_partial. Cost is O(m**2) rational operations plus the
    base row.
    """
    query = FiniteSumQuery(m, n, Fraction(x))
    m, n, x = query.m, query.n, query.x
    fibs = FibSequence()
    base = 1 - x - x * x
    x_sq = x * x
    table: dict[tuple[int, int], Fraction] = {}
    for u in range(max(0, n - m), n + 1):
        table[0, u] = (
            fib_geometric_partial(1, u, x, fibs) if u >= 1 else Fraction(0)
        )
    for j in range(1, m + 1):
        for u in range(max(0, n - m + j), n + 1):
            if u == 0:
                table[j, u] = Fraction(0)
                continue
            signed = Fraction(0)
            shifted = Fraction(0)
            for i in range(1, j + 1):
                weight = binomial(j, i)
                term = weight * table[j - i, u]
                signed += term if i & 1 else -term
                shifted += weight * table[j - i, u - 1]
            boundary = u**j * (fibs[u + 1] * x ** (u + 1) + fibs[u] * x ** (u + 2))
            table[j, u] = (signed + x_sq * shifted - boundary) / base
    return table[m, n]


class Identity(enum.Enum):
    """Catalog of closed-form identities checkable against direct_sum.

    Mind the upper limits: SUM_F and ALT_F cover r = 1..n-1 while the
    other three cover r = 1..n. (The catalog keeps each identity in its
    traditional shape instead of normalizing the limits.)
    """

    SUM_F = "sum_f"        # sum_{r=1..n-1} F(r)                 = F(n+1) - 1
    SUM_RF = "sum_rf"      # sum_{r=1..n} r*F(r)                 = n*F(n+2) - F(n+3) + 2
    SUM_R2F = "sum_r2f"    # sum_{r=1..n} r^2*F(r) = (n^2+2)F(n+2) - (2n-3)F(n+3) - 8
    ALT_F = "alt_f"        # sum_{r=1..n-1} (-1)^r F(r)          = (-1)^(n-1) F(n-2) - 1
    ALT_RF = "alt_rf"      # sum_{r=1..n} (-1)^r r F(r)
    #                        = (-1)^n (n+1) F(n-1) + (-1)^(n-1) F(n-2) - 2


def closed_identity(ident: Identity, n: int) -> int:
    """Evaluate one cataloged closed form at n >= 1 (exact integer).

    ALT_F and ALT_RF reach down to F(n-2), so n = 1 leans on the F(-1)
    extension.
    """
    if not isinstance(ident, Identity):
        raise ValueError(f"unknown identity: {ident!r}")
    if n < 1:
        raise ValueError(f"identity limit n must be >= 1, got {n}")
    if ident is Identity.SUM_F:
        return fib(n + 1) - 1
    if ident is Identity.SUM_RF:
        return n * fib(n + 2) - fib(n + 3) + 2
    if ident is Identity.SUM_R2F:
        return (n * n + 2) * fib(n + 2) - (2 * n - 3) * fib(n + 3) - 8
    if ident is Identity.ALT_F:
        return (-1) ** (n - 1) * fib(n - 2) - 1
    return (-1) ** n * (n + 1) * fib(n - 1) + (-1) ** (n - 1) * fib(n - 2) - 2
