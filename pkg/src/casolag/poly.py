"""Dense univariate polynomials and Laurent polynomials over exact rationals.

Every coefficient is a ``fractions.Fraction``; nothing in this package ever
touches floating point except the degree sentinel of the zero polynomial.
Polynomials are immutable value objects: ascending coefficient tuples with
trailing zeros stripped, so structural equality is mathematical equality.

The canonical text rendering (``render`` / ``Poly.__str__``) is the exchange
format used by the CLI and the config files: ``-12*x^5+144*x^4-628*x^3+...``,
no spaces, descending powers, ``^`` for exponentiation.  ``parsing.parse_poly``
is the inverse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction

RatLike = Union[Fraction, int, str]

# degree of the zero polynomial; compares below every integer
NEG_INF = float("-inf")


def as_rat(v: RatLike) -> Fraction:
    """Coerce int / Fraction / 'p/q' string to Fraction.  Floats are refused."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"not an exact rational: {v!r}")


def rat_str(v: Fraction) -> str:
    """Serialize a Fraction as 'p' or 'p/q' (lowest terms, q > 0)."""
    v = as_rat(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


class Poly:
    """Immutable dense polynomial, coefficients ascending by power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def const(c: RatLike) -> "Poly":
        return Poly((as_rat(c),))

    @staticmethod
    def monomial(k: int, c: RatLike = 1) -> "Poly":
        if k < 0:
            raise ValueError("monomial power must be >= 0")
        return Poly((0,) * k + (as_rat(c),))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree as int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (zero beyond the stored range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def lead(self) -> Fraction:
        """Leading coefficient; zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def valuation(self):
        """Smallest power with nonzero coefficient, or None if zero."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return Poly(tuple(c * a for a in self.coeffs))
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    # -- evaluation / composition ------------------------------------

    def __call__(self, arg):
        """Evaluate at a rational, or compose when arg is a Poly (Horner)."""
        if isinstance(arg, Poly):
            result = Poly()
            for c in reversed(self.coeffs):
                result = result * arg + Poly.const(c)
            return result
        x = as_rat(arg)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def translate(self, c: RatLike) -> "Poly":
        """p(x + c)."""
        return self(Poly((as_rat(c), 1)))

    def deriv(self, k: int = 1) -> "Poly":
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(Fraction(i) * cs[i] for i in range(1, len(cs)))
        return Poly(cs)

    def shift_down(self, k: int) -> "Poly":
        """Divide exactly by x^k; the low k coefficients must vanish."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"not divisible by x^{k}")
        return Poly(self.coeffs[k:])

    # -- text ----------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)})"


def _coerce_poly(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v)
    return NotImplemented


def render(p: Poly) -> str:
    """Canonical compact rendering, descending powers, no spaces.

    Round-trips through parsing.parse_poly.  Rational coefficients keep the
    'p/q' shape, so e.g. 7/2*x^2 parses back to the same polynomial because
    '/' binds tighter than '*' for bare numbers.
    """
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = rat_str(mag)
        else:
            xpow = "x" if k == 1 else f"x^{k}"
            body = xpow if mag == 1 else f"{rat_str(mag)}*{xpow}"
        parts.append(sign + body)
    return "".join(parts)


class LaurentPoly:
    """Finite Laurent polynomial: coefficients ascending from power ``low``.

    Normalized so the first and last stored coefficients are nonzero (the
    zero element stores nothing).  Needed for the rational correction terms
    of the bilinear forms, which live in span{x^-1, ..., x^-(g_max+1)}.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs: Iterable[RatLike] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            low = 0
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def term(power: int, c: RatLike) -> "LaurentPoly":
        return LaurentPoly(power, (as_rat(c),))

    @staticmethod
    def of_poly(p: Poly) -> "LaurentPoly":
        return LaurentPoly(0, p.coeffs)

    @staticmethod
    def from_terms(terms) -> "LaurentPoly":
        """Build from an iterable of (power, coeff); repeated powers add."""
        acc: dict = {}
        for k, c in terms:
            acc[k] = acc.get(k, Fraction(0)) + as_rat(c)
        if not acc:
            return LaurentPoly()
        lo = min(acc)
        hi = max(acc)
        return LaurentPoly(lo, [acc.get(k, Fraction(0)) for k in range(lo, hi + 1)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def terms(self):
        """Yield (power, coeff) for nonzero coefficients, ascending."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.low + i, c

    @property
    def lowest(self):
        return self.low if self.coeffs else None

    @property
    def highest(self):
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def poly_part(self) -> Poly:
        """The sub-sum over nonnegative powers, as a Poly."""
        return Poly([self.coeff(k) for k in range(0, (self.highest or 0) + 1)])

    def __add__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly.from_terms(list(self.terms()) + list(other.terms()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            if c == 0:
                return LaurentPoly()
            return LaurentPoly(self.low, tuple(c * a for a in self.coeffs))
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("LaurentPoly", self.low, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.highest, self.low - 1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = rat_str(mag)
            else:
                xpow = "x" if k == 1 else f"x^{k}"
                body = xpow if mag == 1 else f"{rat_str(mag)}*{xpow}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _coerce_laurent(v):
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, Poly):
        return LaurentPoly.of_poly(v)
    if isinstance(v, (int, Fraction)):
        return LaurentPoly(0, (as_rat(v),))
    return NotImplemented
