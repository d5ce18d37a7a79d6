"""Exact integer and rational building blocks.

Fibonacci numbers from index -1 upward, binomial coefficients, rational-literal
parsing, and decimal rendering of rationals. Every value is a Python int or
a ``fractions.Fraction``, so all arithmetic is exact; nothing here touches
floating point. ``Fraction`` keeps rationals canonical automatically
(reduced, positive denominator, 0 == 0/1), which the rest of the package
relies on.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "fib",
    "FibSequence",
    "binomial",
    "parse_rational",
    "to_decimal",
]


def fib(n: int) -> int:
    """Fibonacci number F(n) for n >= -1, computed by fast doubling.

    The index domain is extended by one step below zero with F(-1) = 1,
    the value forced by running the recurrence backwards from
    F(1) = F(0) + F(-1).
    """
    if n < -1:
        raise ValueError(f"Fibonacci index must be >= -1, got {n}")
    if n == -1:
        return 1
    a, b = 0, 1  # F(0), F(1); invariant below: (F(k), F(k+1)) for the prefix k
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)  # F(2k)
        d = a * a + b * b    # F(2k+1)
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a


class FibSequence:
    """Growable table of Fibonacci numbers indexed from -1 upward.

    Filled by the plain additive recurrence, so it doubles as an
    independent check on :func:`fib`. Instances are cheap; create one per
    evaluation rather than sharing across threads (the cache list is not
    synchronized).
    """

    __slots__ = ("_values",)

    def __init__(self) -> None:
        self._values = [1, 0, 1]  # F(-1), F(0), F(1)

    def __getitem__(self, n: int) -> int:
        if n < -1:
            raise ValueError(f"Fibonacci index must be >= -1, got {n}")
        values = self._values
        while len(values) - 2 < n:
            values.append(values[-1] + values[-2])
        return values[n + 1]

    def __len__(self) -> int:
        return len(self._values)


def binomial(m: int, i: int) -> int:
    """Binomial coefficient C(m, i) for 0 <= i <= m.

    Multiplicative evaluation: the running product after k factors equals
    C(m - i + k, k), so every intermediate division is exact and no full
    factorial is ever formed.
    """
    if m < 0 or i < 0 or i > m:
        raise ValueError(f"binomial requires 0 <= i <= m, got m={m}, i={i}")
    i = min(i, m - i)
    result = 1
    for k in range(1, i + 1):
        result = result * (m - i + k) // k
    return result


_RATIONAL_LITERAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal: an optional sign, then "p" or "p/q".

    Decimal notation is rejected on purpose; accepting "0.1" would invite
    silently approximate inputs.
    """
    match = _RATIONAL_LITERAL.match(text.strip())
    if match is None:
        raise ValueError(f"not an exact rational literal (use p or p/q): {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def to_decimal(q: Fraction | int, digits: int = 12) -> str:
    """Render a rational to `digits` significant digits, round half to even.

    Uses plain positional notation in the mid range and switches to
    scientific notation ("d.dd...e<exp>") once |q| >= 10**15 or
    0 < |q| < 10**-4. All digit extraction is integer arithmetic.
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    q = Fraction(q)
    if q == 0:
        return "0"
    n, d = abs(q.numerator), q.denominator
    exp = _floor_log10(n, d)
    # Round |q| to the nearest multiple of 10**(exp - digits + 1).
    shift = digits - 1 - exp
    if shift >= 0:
        significand = _div_round_half_even(n * 10**shift, d)
    else:
        significand = _div_round_half_even(n, d * 10**-shift)
    if significand == 10**digits:
        # Rounding carried into the next decade (e.g. 9.99 -> 10.0).
        significand //= 10
        exp += 1
    text = _format_significand(significand, exp, digits)
    return "-" + text if q < 0 else text


def _floor_log10(n: int, d: int) -> int:
    """Exact floor(log10(n/d)) for positive integers n, d."""
    e = len(str(n)) - len(str(d))
    # The estimate is off by at most one, always on the high side.
    if e >= 0:
        if n < d * 10**e:
            e -= 1
    elif n * 10**-e < d:
        e -= 1
    return e


def _div_round_half_even(a: int, b: int) -> int:
    """Round a/b (a >= 0, b > 0) to the nearest integer, ties to even."""
    quot, rem = divmod(a, b)
    if 2 * rem > b or (2 * rem == b and quot & 1):
        quot += 1
    return quot


def _format_significand(significand: int, exp: int, digits: int) -> str:
    s = str(significand)  # exactly `digits` characters
    if exp >= 15 or exp <= -5:
        mantissa = s if digits == 1 else s[0] + "." + s[1:]
        return f"{mantissa}e{exp}"
    point = exp + 1  # count of digits before the decimal point
    if point >= digits:
        return s + "0" * (point - digits)
    if point > 0:
        return s[:point] + "." + s[point:]
    return "0." + "0" * -point + s
