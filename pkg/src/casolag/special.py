"""Pochhammer symbols, Gamma-function ratios, generalized binomials,
the binomial basis binom(x+l, l), and Casoratian determinants.

Gamma functions never appear alone in this package, only as ratios
Gamma(a+s)/Gamma(a) with integer s, which are rational in a.  Normalizing
every moment by Gamma(a) therefore keeps the entire computation inside the
rationals.  A ratio with negative shift can hit a pole of the denominator
Pochhammer product; that is reported as PoleError and means the weight
parameter sits at one of the excluded integer values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

from .linalg import det_poly
from .poly import Poly, Rat, as_rat


class PoleError(ArithmeticError):
    """Gamma ratio evaluated at a pole of the analytic continuation."""

    def __init__(self, alpha, s):
        self.alpha = alpha
        self.s = s
        super().__init__(f"gamma_ratio({alpha}, {s}) hits a Gamma pole")


def poch(a, n: int) -> Fraction:
    """Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("poch needs n >= 0")
    a = as_rat(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def gamma_ratio(alpha, s: int) -> Fraction:
    """Gamma(alpha+s)/Gamma(alpha) for integer s, exactly.

    Equals poch(alpha, s) for s >= 0 and 1/poch(alpha+s, -s) for s < 0.
    The s >= 0 branch also covers nonpositive-integer alpha by continuity
    (the ratio of two poles of consecutive order is the limit value 0 or a
    finite number, which is what the Pochhammer product yields).
    """
    alpha = as_rat(alpha)
    if s >= 0:
        return poch(alpha, s)
    denom = poch(alpha + s, -s)
    if denom == 0:
        raise PoleError(alpha, s)
    return 1 / denom


def binom_rat(top, k: int) -> Fraction:
    """Generalized binomial binom(top, k) for integer k; 0 when k < 0."""
    if k < 0:
        return Fraction(0)
    top = as_rat(top)
    return poch(top - k + 1, k) / math.factorial(k)


def binom_poly(l: int) -> Poly:
    """binom(x+l, l) = (x+1)(x+2)...(x+l)/l! as a Poly of degree l."""
    if l < 0:
        raise ValueError("binom_poly needs l >= 0")
    p = Poly.one()
    for k in range(1, l + 1):
        p = p * Poly((k, 1))
    return p * Fraction(1, math.factorial(l))


def to_binomial_basis(p: Poly) -> List[Fraction]:
    """Coefficients w with p = sum_l w[l]*binom_poly(l).

    The change of basis is triangular: binom_poly(l) has degree l and
    leading coefficient 1/l!, so peel from the top degree downward.
    """
    if p.is_zero():
        return [Fraction(0)]
    d = p.degree
    w = [Fraction(0)] * (d + 1)
    rest = p
    for l in range(d, -1, -1):
        w[l] = rest.coeff(l) * math.factorial(l)
        if w[l] != 0:
            rest = rest - w[l] * binom_poly(l)
    assert rest.is_zero()
    return w


def from_binomial_basis(w: Sequence) -> Poly:
    """Inverse of to_binomial_basis."""
    out = Poly.zero()
    for l, c in enumerate(w):
        c = as_rat(c)
        if c != 0:
            out = out + c * binom_poly(l)
    return out


def casoratian(polys: Sequence[Poly]) -> Poly:
    """Shifted-argument determinant det(p_i(x-j)), i = 1..s, j = 0..s-1.

    The discrete analogue of the Wronskian.  For seeds of pairwise distinct
    degrees d_i the result has degree sum(d_i) - s(s-1)/2; a repeated degree
    forces a strictly smaller one.
    """
    s = len(polys)
    if s < 1:
        raise ValueError("casoratian needs at least one polynomial")
    M = [[p.translate(-j) for j in range(s)] for p in polys]
    return det_poly(M)


def combinatorial_identity_check(alpha: int, k: int, l: int, u_max: int) -> bool:
    """Exact check of the alternating binomial convolution

        sum_{j=0}^{l-alpha-k} (-1)^j binom(alpha+j+k-l-1, j) binom(alpha+u, alpha+j)
            = binom(u+l-k, l-k)

    for all integers u = 0..u_max.  Requires l >= alpha + k >= 0.
    """
    if alpha < 0 or k < 0 or l < alpha + k:
        raise ValueError("needs alpha, k >= 0 and l >= alpha + k")
    for u in range(u_max + 1):
        lhs = Fraction(0)
        for j in range(l - alpha - k + 1):
            lhs += (-1) ** j * binom_rat(alpha + j + k - l - 1, j) * binom_rat(alpha + u, alpha + j)
        if lhs != binom_rat(u + l - k, l - k):
            return False
    return True
