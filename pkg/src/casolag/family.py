"""Seeded Laguerre-type families.

A family is specified by a rational parameter alpha, a strictly increasing
set G = {g_1 < ... < g_m} of positive integers, and seed polynomials R_g of
degree exactly g.  The shifted determinant

    Omega(x) = det( R_{g_l}(x - j) ),  l, j = 1..m,

must not vanish at any nonnegative integer (admissibility); then

    q_n = sum_{j=0}^{min(m,n)} beta_{n,j} L_{n-j},

with beta_{n,j} the signed maximal minors of the (m+1)-column value matrix
(R_g(n-i))_{i=0..m}, is a degree-n polynomial for every n.  Admissibility is
certified, not sampled: Omega is a polynomial, so nonvanishing on all
nonnegative integers reduces to a finite scan below a root bound.

Seed leading coefficients are not forced to 1/g!: rescaling a seed only
rescales every q_n by the same constant, and all invariants used downstream
are stated in a normalization-free way.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .laguerre import laguerre
from .linalg import det_rat, solve_linear, InconsistentSystem
from .parsing import parse_poly
from .poly import Poly, as_rat, rat_str, render
from .special import binom_poly, poch


class DegenerateFamily(Exception):
    """The shifted determinant vanishes where the construction needs it."""


class InvalidPreset(ValueError):
    """Preset parameters outside their validity range."""


@dataclass(frozen=True)
class FamilySpec:
    alpha: Fraction
    G: Tuple[int, ...]
    R: Dict[int, Poly]

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rat(self.alpha))
        G = tuple(int(g) for g in self.G)
        if not G:
            raise ValueError("G must be nonempty")
        if any(g <= 0 for g in G):
            raise ValueError("G entries must be positive integers")
        if any(G[i] >= G[i + 1] for i in range(len(G) - 1)):
            raise ValueError("G must be strictly increasing")
        object.__setattr__(self, "G", G)
        R = {int(g): p for g, p in self.R.items()}
        if set(R) != set(G):
            raise ValueError("R must have exactly one seed per element of G")
        for g, p in R.items():
            if p.degree != g:
                raise ValueError(f"seed for g={g} must have degree exactly {g}")
        object.__setattr__(self, "R", R)

    @property
    def m(self) -> int:
        return len(self.G)

    @property
    def max_g(self) -> int:
        return self.G[-1]

    def seeds(self) -> List[Poly]:
        return [self.R[g] for g in self.G]

    def to_json_dict(self) -> dict:
        return {
            "alpha": rat_str(self.alpha),
            "G": list(self.G),
            "R": {str(g): render(self.R[g]) for g in self.G},
        }


@dataclass
class BetaRow:
    n: int
    values: Tuple[Fraction, ...]


@dataclass
class AdmissibilityCertificate:
    omega: Poly
    integer_scan_bound: int
    verdict: str  # "pass" | "fail"
    fail_n: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def omega(spec: FamilySpec) -> Poly:
    """det(R_{g_l}(x-j))_{l,j=1..m}; the casoratian of the seeds at x-1."""
    from .special import casoratian

    return casoratian(spec.seeds()).translate(-1)


def certify_admissible(spec: FamilySpec) -> AdmissibilityCertificate:
    """Certify Omega(n) != 0 for every integer n >= 0.

    All real roots of Omega lie strictly below the Cauchy bound
    1 + max_k |a_k|/|a_d|, so scanning the integers up to its ceiling is a
    complete check.
    """
    om = omega(spec)
    if om.is_zero():
        raise DegenerateFamily("shifted determinant is identically zero")
    lead = abs(om.lead)
    bound = max((abs(c) / lead for c in om.coeffs[:-1]), default=Fraction(0))
    scan = math.ceil(1 + bound)
    for n in range(scan + 1):
        if om(n) == 0:
            return AdmissibilityCertificate(om, scan, "fail", fail_n=n)
    return AdmissibilityCertificate(om, scan, "pass")


def beta(spec: FamilySpec, n: int) -> BetaRow:
    """Signed maximal minors of (R_g(n-i))_{g in G, i=0..m}.

    beta_{n,j} = (-1)^j det of the matrix with column i=j deleted; the
    alternating sum sum_j beta_{n,j} R_g(n-j) vanishes for every g in G,
    and beta_{n,0} = Omega(n), beta_{n,m} = (-1)^m Omega(n+1).
    """
    if n < 0:
        raise ValueError("needs n >= 0")
    m = spec.m
    cols = [[spec.R[g](n - i) for g in spec.G] for i in range(m + 1)]
    values = []
    for j in range(m + 1):
        minor = [[cols[i][l] for i in range(m + 1) if i != j] for l in range(m)]
        values.append((-1) ** j * det_rat(minor))
    return BetaRow(n, tuple(values))


def q_poly(spec: FamilySpec, n: int) -> Poly:
    """The degree-n family member q_n = sum_j beta_{n,j} L_{n-j}.

    Raises DegenerateFamily when Omega(n) = 0, because then beta_{n,0} = 0
    and the degree drops below n.
    """
    row = beta(spec, n)
    if row.values[0] == 0:
        raise DegenerateFamily(f"Omega({n}) = 0: q_{n} would lose degree")
    out = Poly.zero()
    for j in range(min(spec.m, n) + 1):
        out = out + row.values[j] * laguerre(n - j, spec.alpha)
    return out


def reduce_representation(spec: FamilySpec) -> FamilySpec:
    """Equivalent seeds in which R_g carries no monomial x^h for h in G, h < g.

    Adding multiples of lower seeds to a higher one leaves every q_n (and
    every beta row) unchanged; this picks the canonical representative of
    that orbit by triangular elimination.
    """
    reduced: Dict[int, Poly] = {}
    for g in spec.G:
        p = spec.R[g]
        for h in reversed([h for h in spec.G if h < g]):
            c = p.coeff(h)
            if c != 0:
                # reduced[h] is already clean above degree h except its lead
                p = p - (c / reduced[h].lead) * reduced[h]
        reduced[g] = p
    return FamilySpec(spec.alpha, spec.G, reduced)


def krall_preset(alpha: int, m: int, a: Sequence) -> FamilySpec:
    """Seeds generating the classical point-mass-perturbed Laguerre families.

    G = {alpha, ..., alpha+m-1} and, for h = 1..m,

        R_{g_h} = binom(x+alpha+h-1, alpha+h-1)
                  + (h-1)! sum_{l=0}^{h-1} (-1)^l a_{h-l-1}/(alpha-l)_l binom(x+l, l).

    Requires integer alpha >= m >= 1 and a_0 != 0 (a has length m).
    """
    if not isinstance(alpha, int) or not isinstance(m, int):
        raise InvalidPreset("alpha and m must be integers")
    if m < 1 or alpha < m:
        raise InvalidPreset("needs alpha >= m >= 1")
    a = [as_rat(v) for v in a]
    if len(a) != m:
        raise InvalidPreset(f"a must have length m = {m}")
    if a[0] == 0:
        raise InvalidPreset("a[0] must be nonzero")
    return FamilySpec(Fraction(alpha), tuple(range(alpha, alpha + m)),
                      {alpha + h - 1: _preset_seed(alpha, h, a, h - 1) for h in range(1, m + 1)})


def degenerate_preset(alpha: int, m: int, a_tilde: Sequence) -> FamilySpec:
    """Variant of krall_preset for 1 <= alpha <= m-1.

    Same G and leading binomial, but the correction sum for R_{g_h} stops at
    l = h+alpha-m-1 (empty when negative), so only a_tilde[m-alpha..m-1]
    enter.  a_tilde has length m; the unused leading entries are ignored.
    The resulting q_n all vanish to order m-alpha at 0 once n >= m-alpha.
    """
    if not isinstance(alpha, int) or not isinstance(m, int):
        raise InvalidPreset("alpha and m must be integers")
    if alpha < 1 or alpha >= m:
        raise InvalidPreset("needs 1 <= alpha <= m-1")
    a_tilde = [as_rat(v) for v in a_tilde]
    if len(a_tilde) != m:
        raise InvalidPreset(f"a_tilde must have length m = {m}")
    return FamilySpec(Fraction(alpha), tuple(range(alpha, alpha + m)),
                      {alpha + h - 1: _preset_seed(alpha, h, a_tilde, h + alpha - m - 1)
                       for h in range(1, m + 1)})


def _preset_seed(alpha: int, h: int, a: Sequence[Fraction], l_top: int) -> Poly:
    p = binom_poly(alpha + h - 1)
    corr = Poly.zero()
    for l in range(0, l_top + 1):
        corr = corr + ((-1) ** l * a[h - l - 1] / poch(alpha - l, l)) * binom_poly(l)
    return p + math.factorial(h - 1) * corr


def match_krall_parameters(spec: FamilySpec) -> Optional[List[Fraction]]:
    """Decide whether the family coincides with a preset family.

    Families are identified up to the two symmetries that leave the q_n
    unchanged (up to constants): rescaling each seed, and adding multiples
    of lower seeds to higher ones.  Returns the recovered a-vector when the
    spec lies in the krall_preset orbit (alpha >= m) or degenerate_preset
    orbit (alpha <= m-1), else None.  Only defined for positive integer
    alpha and G = {alpha, ..., alpha+m-1}.
    """
    alpha = spec.alpha
    if alpha.denominator != 1 or alpha <= 0:
        return None
    alpha = int(alpha)
    m = spec.m
    if spec.G != tuple(range(alpha, alpha + m)):
        return None
    krall = alpha >= m

    # normalize seed leads to 1/g!
    norm = {g: spec.R[g] * (Fraction(1, math.factorial(g)) / spec.R[g].lead)
            for g in spec.G}

    # unknowns: eta_{h,h'} (h' < h) for the lower-seed mixing, then a_0..a_{m-1}
    eta_index = {}
    for h in range(2, m + 1):
        for hp in range(1, h):
            eta_index[(h, hp)] = len(eta_index)
    n_eta = len(eta_index)
    n_unknown = n_eta + m

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for h in range(1, m + 1):
        g = alpha + h - 1
        l_top = h - 1 if krall else h + alpha - m - 1
        # target: norm_g + sum eta * norm_lower - correction(a) = binom(x+g, g)
        base = norm[g] - binom_poly(g)
        corr_cols = []
        for l in range(0, l_top + 1):
            corr_cols.append((h - l - 1,
                              math.factorial(h - 1) * (-1) ** l / poch(alpha - l, l)))
        for t in range(g + 1):
            row = [Fraction(0)] * n_unknown
            for hp in range(1, h):
                row[eta_index[(h, hp)]] = norm[alpha + hp - 1].coeff(t)
            for a_idx, scale in corr_cols:
                bp = binom_poly(h - 1 - a_idx)  # the l with h-l-1 = a_idx
                row[n_eta + a_idx] -= scale * bp.coeff(t)
            rows.append(row)
            rhs.append(-base.coeff(t))
    try:
        sol = solve_linear(rows, rhs)
    except InconsistentSystem:
        return None
    assert sol.particular is not None
    a_vec = sol.particular[n_eta:]
    if krall and a_vec[0] == 0:
        # a_0 is forced or adjustable; try to push it off zero along the nullspace
        for v in sol.nullspace:
            if v[n_eta] != 0:
                a_vec = [ai + vi for ai, vi in zip(a_vec, v[n_eta:])]
                break
        else:
            return None
    return list(a_vec)


# -- JSON interchange -------------------------------------------------


def spec_to_json(spec: FamilySpec) -> str:
    return json.dumps(spec.to_json_dict(), sort_keys=True, indent=2)


def spec_from_json_dict(obj: dict) -> FamilySpec:
    """Build a spec from its JSON form, expanding preset descriptors.

    Direct form: {"alpha": "p/q", "G": [g...], "R": {"g": "<poly>"}}.
    Preset form: {"preset": "krall"|"degenerate", "alpha": int, "m": int,
    "a": ["p/q", ...]}.
    """
    if not isinstance(obj, dict):
        raise ValueError("family config must be a JSON object")
    if "preset" in obj:
        kind = obj["preset"]
        try:
            alpha = int(obj["alpha"])
            m = int(obj["m"])
            a = [as_rat(v) for v in obj["a"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"bad preset descriptor: {e}") from e
        if kind == "krall":
            return krall_preset(alpha, m, a)
        if kind == "degenerate":
            return degenerate_preset(alpha, m, a)
        raise ValueError(f"unknown preset kind {kind!r}")
    try:
        alpha = as_rat(obj["alpha"])
        G = [int(g) for g in obj["G"]]
        R = {int(g): parse_poly(text) for g, text in obj["R"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"bad family config: {e}") from e
    return FamilySpec(alpha, tuple(G), R)


def spec_from_json(text: str) -> FamilySpec:
    return spec_from_json_dict(json.loads(text))
