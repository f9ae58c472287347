"""Bilinear forms under which the constructed families are orthogonal.

Two variants, both reported divided by Gamma(alpha) so values are exact
rationals:

* generic: defined whenever alpha is not an integer <= max(G).  Pairs
      <p,q> = int p q mu_{alpha-m} + sum_i q^(i)(0)/i! int p U_i mu_alpha,
  where the U_i are Laurent corrections built from the seeds; negative
  powers are integrated by the analytic continuation of the Gamma ratios.

* xi: for positive integer alpha <= max(G), where the generic form hits
  Gamma poles.  The first integral gains a derivative of order
  max(0, m-alpha) and drops to the weight parameter max(0, alpha-m); the
  Laurent corrections are truncated at power -alpha; the truncated tail
  reappears as a discrete part in derivative values at 0.  All integrals
  are then pole-free.

The kappa coefficients entering the corrections are solved once per family:
row i annihilates the seed values at -1..-(m-1-i) and is normalized to give
value 1 at -(m-i), with non-pivot components zeroed, which makes the matrix
a canonical function of the family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .family import DegenerateFamily, FamilySpec, q_poly
from .linalg import InconsistentSystem, solve_linear
from .poly import LaurentPoly, Poly, as_rat
from .special import binom_rat, gamma_ratio, poch, to_binomial_basis


class VariantError(Exception):
    """Form evaluated outside its variant's validity range."""


@dataclass(frozen=True)
class KappaMatrix:
    rows: Tuple[Tuple[Fraction, ...], ...]  # rows[i][l] pairs with G[l]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.rows[i]


def kappa_solve(spec: FamilySpec, i: int) -> List[Fraction]:
    """Row i of the kappa matrix.

    Solves sum_g kappa^g R_g(-j) = 0 for j = 1..m-1-i together with the
    normalization sum_g kappa^g R_g(-(m-i)) = 1.  The system has full rank
    whenever Omega(0) != 0 (its rows are leading columns of the value
    matrix behind Omega(0)), so admissible families always pass.
    """
    m = spec.m
    if not 0 <= i < m:
        raise ValueError(f"i must be in 0..{m - 1}")
    rows = []
    rhs = []
    for j in range(1, m - i):
        rows.append([spec.R[g](-j) for g in spec.G])
        rhs.append(Fraction(0))
    rows.append([spec.R[g](-(m - i)) for g in spec.G])
    rhs.append(Fraction(1))
    try:
        sol = solve_linear(rows, rhs)
    except InconsistentSystem as e:
        raise DegenerateFamily(
            "kappa system unsolvable; Omega(0) must vanish") from e
    return list(sol.particular)


def kappa_matrix(spec: FamilySpec) -> KappaMatrix:
    return KappaMatrix(tuple(tuple(kappa_solve(spec, i)) for i in range(spec.m)))


def _seed_w(spec: FamilySpec, g: int) -> List[Fraction]:
    return to_binomial_basis(spec.R[g])


def u_function(spec: FamilySpec, kappa_row: Sequence, i: int) -> LaurentPoly:
    """Laurent correction for row i:

        U_i = -x^(i-m) + sum_g kappa^g sum_{l=0}^g (alpha-l)_l w_l^g x^(-l-1),

    with w^g the binomial-basis coefficients of the seed R_g.
    """
    alpha = spec.alpha
    terms = [(i - spec.m, Fraction(-1))]
    for kap, g in zip(kappa_row, spec.G):
        kap = as_rat(kap)
        if kap == 0:
            continue
        w = _seed_w(spec, g)
        for l in range(g + 1):
            c = kap * poch(alpha - l, l) * w[l]
            if c != 0:
                terms.append((-l - 1, c))
    return LaurentPoly.from_terms(terms)


def u_function_alt(spec: FamilySpec, kappa_row: Sequence, i: int) -> LaurentPoly:
    """Collapsed form of u_function, valid when kappa_row annihilates the
    seed values at -1..-(m-1-i): the powers above x^(i-m) cancel and

        U_i = -x^(i-m) + sum_{l=m-i-1}^{maxG} (alpha-l)_l x^(-l-1)
                              sum_{g >= l} kappa^g w_l^g.
    """
    alpha = spec.alpha
    terms = [(i - spec.m, Fraction(-1))]
    w_by_g = {g: _seed_w(spec, g) for g in spec.G}
    for l in range(max(spec.m - i - 1, 0), spec.max_g + 1):
        inner = Fraction(0)
        for kap, g in zip(kappa_row, spec.G):
            if g >= l:
                inner += as_rat(kap) * w_by_g[g][l]
        c = poch(alpha - l, l) * inner
        if c != 0:
            terms.append((-l - 1, c))
    return LaurentPoly.from_terms(terms)


def xi_u_function(spec: FamilySpec, kappa_row: Sequence, i: int) -> LaurentPoly:
    """Integrand correction of the xi variant for row i.

    Sum over g < alpha of the full U-corrections and over g >= alpha of
    their truncations at power -alpha; the x^(i-m) head carries the factor
    (i-m+alpha+1)_{max(0,m-alpha)}, which vanishes exactly for the rows
    where that power would reach a Gamma pole.
    """
    alpha_int = _xi_alpha(spec)
    m = spec.m
    xi_big = max(0, m - alpha_int)
    head = poch(Fraction(i - m + alpha_int + 1), xi_big)
    terms = []
    if head != 0:
        terms.append((i - m, -head))
    for kap, g in zip(kappa_row, spec.G):
        kap = as_rat(kap)
        if kap == 0:
            continue
        w = _seed_w(spec, g)
        l_top = g if g < alpha_int else alpha_int - 1
        for l in range(l_top + 1):
            c = kap * poch(spec.alpha - l, l) * w[l]
            if c != 0:
                terms.append((-l - 1, c))
    return LaurentPoly.from_terms(terms)


def _xi_alpha(spec: FamilySpec) -> int:
    alpha = spec.alpha
    if alpha.denominator != 1 or not 1 <= alpha <= spec.max_g:
        raise VariantError(
            f"xi variant needs integer alpha in 1..{spec.max_g}, got {alpha}")
    return int(alpha)


def _check_generic(spec: FamilySpec) -> None:
    alpha = spec.alpha
    if alpha.denominator == 1 and alpha <= spec.max_g:
        raise VariantError(
            f"generic variant undefined for integer alpha <= {spec.max_g}")


class BilinearForm:
    """A family's bilinear form with a fixed kappa matrix and variant."""

    def __init__(self, spec: FamilySpec, kappa: Optional[KappaMatrix], variant: str):
        if variant not in ("generic", "xi"):
            raise ValueError(f"unknown variant {variant!r}")
        if variant == "generic":
            _check_generic(spec)
        else:
            _xi_alpha(spec)
        self.spec = spec
        self.kappa = kappa if kappa is not None else kappa_matrix(spec)
        self.variant = variant
        self._corrections = None

    @classmethod
    def generic(cls, spec: FamilySpec, kappa: Optional[KappaMatrix] = None):
        return cls(spec, kappa, "generic")

    @classmethod
    def xi(cls, spec: FamilySpec, kappa: Optional[KappaMatrix] = None):
        return cls(spec, kappa, "xi")

    def corrections(self) -> List[LaurentPoly]:
        if self._corrections is None:
            build = u_function if self.variant == "generic" else xi_u_function
            self._corrections = [build(self.spec, self.kappa.row(i), i)
                                 for i in range(self.spec.m)]
        return self._corrections

    def inner(self, p: Poly, q: Poly) -> Fraction:
        if self.variant == "generic":
            return inner_generic(self, p, q)
        return inner_xi(self, p, q)


def _laurent_moment(alpha: Fraction, lp: LaurentPoly) -> Fraction:
    """int lp mu_alpha / Gamma(alpha): termwise Gamma ratios, with negative
    powers through the analytic continuation."""
    total = Fraction(0)
    for t, c in lp.terms():
        total += c * gamma_ratio(alpha, t + 1)
    return total


def inner_generic(form: BilinearForm, p: Poly, q: Poly) -> Fraction:
    """Generic-variant pairing, divided by Gamma(alpha)."""
    if form.variant != "generic":
        raise VariantError("inner_generic called on a non-generic form")
    spec = form.spec
    alpha = spec.alpha
    total = Fraction(0)
    pq = p * q
    for t in range(len(pq.coeffs)):
        c = pq.coeff(t)
        if c != 0:
            total += c * gamma_ratio(alpha, t + 1 - spec.m)
    for i in range(spec.m):
        qi = q.coeff(i)  # q^(i)(0)/i!
        if qi != 0:
            total += qi * _laurent_moment(alpha, LaurentPoly.of_poly(p) * form.corrections()[i])
    return total


def inner_xi(form: BilinearForm, p: Poly, q: Poly) -> Fraction:
    """Xi-variant pairing, divided by Gamma(alpha); pole-free by design."""
    if form.variant != "xi":
        raise VariantError("inner_xi called on a non-xi form")
    spec = form.spec
    alpha_int = _xi_alpha(spec)
    alpha = spec.alpha
    m = spec.m
    xi_big = max(0, m - alpha_int)
    xi_small = -min(0, m - alpha_int)

    total = Fraction(0)
    pq = p * q.deriv(xi_big)
    for t in range(len(pq.coeffs)):
        c = pq.coeff(t)
        if c != 0:
            total += c * gamma_ratio(alpha, xi_small + t + 1 - alpha_int)

    for i in range(m):
        qi = q.coeff(i)
        if qi == 0:
            continue
        total += qi * _laurent_moment(alpha, LaurentPoly.of_poly(p) * form.corrections()[i])
        # discrete part: the truncated tail of the g >= alpha corrections
        disc = Fraction(0)
        for kap, g in zip(form.kappa.row(i), spec.G):
            if g < alpha_int or kap == 0:
                continue
            w = _seed_w(spec, g)
            for j in range(g - alpha_int + 1):
                pj = p.coeff(j)
                if pj == 0:
                    continue
                s = Fraction(0)
                for l in range(alpha_int + j, g + 1):
                    s += poch(alpha - l, j) * w[l]
                disc += as_rat(kap) * pj * s
        total += qi * disc
    return total


def closed_form_moment(spec: FamilySpec, kappa_row: Sequence, k: int, u: int) -> Fraction:
    """Closed form of <x^k L_u, x^i> / Gamma(alpha) for the row's kappa:

        sum_g kappa^g sum_{l=k}^g (alpha-l)_k w_l^g binom(u+l-k, l-k).

    Valid for u >= k >= 0; reduces to sum_g kappa^g R_g(u) at k = 0.
    """
    if not 0 <= k <= u:
        raise ValueError("needs 0 <= k <= u")
    alpha = spec.alpha
    total = Fraction(0)
    for kap, g in zip(kappa_row, spec.G):
        kap = as_rat(kap)
        if kap == 0:
            continue
        w = _seed_w(spec, g)
        for l in range(k, g + 1):
            total += kap * poch(alpha - l, k) * w[l] * binom_rat(u + l - k, l - k)
    return total


@dataclass
class OrthoReport:
    nmax: int
    variant: str
    passed: bool
    entries: List[Tuple[int, int, Fraction]]  # (n, i, <q_n, q_i>) for i <= n
    first_violation: Optional[Tuple[int, int, Fraction]] = None


def ortho_check(spec: FamilySpec, form: BilinearForm, nmax: int) -> OrthoReport:
    """Verify <q_n, q_i> = 0 for i < n <= nmax and <q_n, q_n> != 0, exactly."""
    qs = [q_poly(spec, n) for n in range(nmax + 1)]
    entries = []
    violation = None
    for n in range(nmax + 1):
        for i in range(n + 1):
            v = form.inner(qs[n], qs[i])
            entries.append((n, i, v))
            bad = (v != 0) if i < n else (v == 0)
            if bad and violation is None:
                violation = (n, i, v)
    return OrthoReport(nmax=nmax, variant=form.variant,
                       passed=violation is None, entries=entries,
                       first_violation=violation)
