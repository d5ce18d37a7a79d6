"""Minimal exact symbolic kernel: polynomials and rational functions.

Dense univariate polynomials over ``Fraction``, canonical rational
functions (reduced, monic denominator), and the weighted derivative
x*d/dx. This is the machinery behind the differentiation baseline for
series sums: apply the weighted derivative m times to the Fibonacci
generating function x/(1 - x - x^2) and evaluate the resulting closed
form.

Polynomial gcds are computed over the integers with a small-prime modular
algorithm (images mod word-sized primes, CRT lifting, and a final exact
trial division that makes the result unconditionally correct). A naive
rational Euclidean remainder sequence works too, but its intermediate
coefficients swell enough to dominate the runtime of repeated
differentiation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Iterator, Union

__all__ = [
    "Polynomial",
    "RationalFunction",
    "PoleError",
    "polynomial_gcd",
    "apply_D",
    "fib_generating_function",
    "baseline_series_closed_form",
    "baseline_series_closed_forms",
    "X",
]

Scalar = Union[Fraction, int]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a denominator root."""

    def __init__(self, point: Fraction):
        super().__init__(f"denominator vanishes at x = {point}")
        self.point = point


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of x**k; the highest-degree
    coefficient is nonzero, and the zero polynomial has no coefficients at
    all. Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> float | int:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        inv = 1 / div[-1]
        quot = [Fraction(0)] * max(0, len(rem) - len(div) + 1)
        while len(rem) >= len(div) and rem:
            coef = rem[-1] * inv
            deg = len(rem) - len(div)
            quot[deg] = coef
            for j in range(len(div)):
                rem[deg + j] -= coef * div[j]
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return self if lead == 1 else Polynomial(c / lead for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                var = "x" if k == 1 else f"x^{k}"
                mag = abs(c)
                term = var if mag == 1 else f"{mag}*{var}"
                if c < 0:
                    term = "-" + term
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def _as_poly(value) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial([value])
    return NotImplemented


X = Polynomial([0, 1])
_ONE = Polynomial([1])


# --------------------------------------------------------------------------
# Polynomial gcd over the rationals, via integer images modulo small primes.
# --------------------------------------------------------------------------

def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials over the rationals."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    g = _int_poly_gcd(_to_int_poly(a), _to_int_poly(b))
    return Polynomial(g).monic()


def _to_int_poly(p: Polynomial) -> list[int]:
    """Scale a rational polynomial by the lcm of denominators."""
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // _int_gcd(scale, c.denominator)
    return [int(c * scale) for c in p.coeffs]


def _int_content(c: list[int]) -> int:
    g = 0
    for v in c:
        g = _int_gcd(g, v)
        if g == 1:
            break
    return g or 1


def _int_primitive(c: list[int]) -> list[int]:
    g = _int_content(c)
    return [v // g for v in c] if g > 1 else c


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin for n < 3.3e24, ample for 62-bit moduli.
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _modular_primes() -> Iterator[int]:
    """Yield primes descending from 2**62 (cached across calls)."""
    i = 0
    while True:
        while len(_PRIME_CACHE) <= i:
            candidate = _PRIME_CACHE[-1] - 2
            while not _is_prime(candidate):
                candidate -= 2
            _PRIME_CACHE.append(candidate)
        yield _PRIME_CACHE[i]
        i += 1


_PRIME_CACHE = [4611686018427387847]  # largest prime below 2**62


def _poly_gcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of the images of a and b in GF(p)[x]."""
    am = [c % p for c in a]
    bm = [c % p for c in b]
    for poly in (am, bm):
        while poly and poly[-1] == 0:
            poly.pop()
    while bm:
        inv = pow(bm[-1], -1, p)
        rem = am
        while len(rem) >= len(bm) and rem:
            coef = rem[-1] * inv % p
            deg = len(rem) - len(bm)
            for j in range(len(bm)):
                rem[deg + j] = (rem[deg + j] - coef * bm[j]) % p
            while rem and rem[-1] == 0:
                rem.pop()
        am, bm = bm, rem
    inv = pow(am[-1], -1, p)
    return [c * inv % p for c in am]


def _int_divides(g: list[int], a: list[int]) -> bool:
    """True iff g divides a exactly over the integers."""
    if len(g) > len(a):
        return False
    rem = list(a)
    lead = g[-1]
    while len(rem) >= len(g) and rem:
        if rem[-1] % lead:
            return False
        coef = rem[-1] // lead
        deg = len(rem) - len(g)
        for j in range(len(g)):
            rem[deg + j] -= coef * g[j]
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials (Brown's modular algorithm).

    Collects monic gcd images modulo primes of minimal degree, lifts the
    coefficients by CRT in symmetric range, and accepts a candidate only
    once it exactly divides both inputs, so unlucky primes merely cost an
    extra round.
    """
    a = _int_primitive(a)
    b = _int_primitive(b)
    lead_gcd = _int_gcd(a[-1], b[-1])
    best_degree: int | None = None
    lifted: list[int] | None = None
    modulus = 1
    for p in _modular_primes():
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        image = _poly_gcd_mod(a, b, p)
        degree = len(image) - 1
        if degree == 0:
            return [1]
        if best_degree is None or degree < best_degree:
            best_degree, lifted, modulus = degree, None, 1
        elif degree > best_degree:
            continue  # unlucky prime
        # Normalize the image so its leading coefficient is gcd(lc(a), lc(b)),
        # which the true gcd's leading coefficient divides.
        scale = lead_gcd * pow(image[-1], -1, p) % p
        image = [c * scale % p for c in image]
        if lifted is None:
            lifted, modulus = image, p
        else:
            inv = pow(modulus % p, -1, p)
            lifted = [
                low + modulus * ((high - low) * inv % p)
                for low, high in zip(lifted, image)
            ]
            modulus *= p
        half = modulus // 2
        candidate = _int_primitive([c - modulus if c > half else c for c in lifted])
        if candidate[-1] < 0:
            candidate = [-c for c in candidate]
        if _int_divides(candidate, a) and _int_divides(candidate, b):
            return candidate
    raise AssertionError("unreachable: prime stream is infinite")


# --------------------------------------------------------------------------
# Rational functions
# --------------------------------------------------------------------------

class RationalFunction:
    """Quotient of two polynomials kept in canonical form.

    Canonical means gcd(num, den) = 1 and the denominator is monic, so two
    equal rational functions are structurally identical and ``==`` is
    sound. The zero function is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = _ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("num and den must be polynomials or scalars")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial(), _ONE
        else:
            g = polynomial_gcd(num, den)
            if g.degree > 0:
                num //= g
                den //= g
            lead = den.leading_coefficient()
            if lead != 1:
                num = Polynomial(c / lead for c in num.coeffs)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at a rational point; raises PoleError on a root of den."""
        x = Fraction(x)
        den_val = self.den(x)
        if den_val == 0:
            raise PoleError(x)
        return self.num(x) / den_val

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _as_rf(value) -> "RationalFunction":
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (Polynomial, int, Fraction)):
        return RationalFunction(value)
    return NotImplemented


def apply_D(f: RationalFunction) -> RationalFunction:
    """The weighted derivative x*f'(x), canonicalized.

    On a power series this multiplies the r-th coefficient by r, which is
    why repeated application generates power-weighted series sums.

    The quotient rule is deflated through g = gcd(den, den'): with
    s = den/g and t = den'/g,

        f' = (num'*den - num*den') / den**2 = (num'*s - num*t) / (den*s),

    which keeps the degrees roughly half of the textbook form before the
    final reduction.
    """
    dden = f.den.derivative()
    if dden.is_zero():
        return RationalFunction(X * f.num.derivative(), f.den)
    g = polynomial_gcd(f.den, dden)
    if g.degree > 0:
        s = f.den // g
        t = dden // g
    else:
        s, t = f.den, dden
    return RationalFunction(X * (f.num.derivative() * s - f.num * t), f.den * s)


def fib_generating_function() -> RationalFunction:
    """x / (1 - x - x^2), whose power-series coefficients are F(1), F(2), ..."""
    return RationalFunction(X, Polynomial([1, -1, -1]))


def baseline_series_closed_forms(m: int) -> list[RationalFunction]:
    """Closed forms of the r**j-weighted Fibonacci series for j = 0..m.

    Entry j is x*d/dx applied j times to the generating function; this is
    the differentiation baseline that the derivative-free series recurrence
    is benchmarked against.
    """
    if m < 0:
        raise ValueError(f"power must be >= 0, got {m}")
    forms = [fib_generating_function()]
    for _ in range(m):
        forms.append(apply_D(forms[-1]))
    return forms


def baseline_series_closed_form(m: int) -> RationalFunction:
    """Closed form of sum_{r>=1} r**m * F(r) * x**r via repeated x*d/dx."""
    return baseline_series_closed_forms(m)[-1]
