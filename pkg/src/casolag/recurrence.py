"""Banded recurrences in the family index and the eigenvalue algebra probe.

Multiplying a family member by a polynomial Q and re-expanding in the family
gives Q(x) q_n = sum_j gamma_{n,j} q_{n+j}; the expansion is triangular
because deg q_k = k with known nonzero leading coefficients, so every
gamma_{n,j} is an exact rational.  A subset of polynomials Q produce BANDED
tables (gamma_{n,j} = 0 below a fixed shift -s with nonzero extremes); those
Q form an algebra, probed here by exact nullspace computation: the map
Q -> gamma_{n,j}(Q) is linear, so "no coefficients below the band through
row N" is a finite linear system in the coefficients of Q.

Membership certified by the probe is always relative to the explored range
(rows up to N, band B); the re-verification helper repeats the band check on
a longer table to guard against truncation artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .family import FamilySpec, q_poly
from .linalg import solve_linear
from .poly import Poly, rat_str, render


@dataclass
class RecurrenceTable:
    Q: Poly
    n_range: range
    rows: Dict[int, Dict[int, Fraction]]  # n -> {j: gamma_{n,j}}, zeros omitted

    def gamma(self, n: int, j: int) -> Fraction:
        return self.rows[n].get(j, Fraction(0))


def _q_ladder(spec: FamilySpec, top: int) -> List[Poly]:
    return [q_poly(spec, k) for k in range(top + 1)]


def expand_in_q(spec: FamilySpec, p: Poly, qs: Optional[Sequence[Poly]] = None) -> List[Fraction]:
    """Coefficients c with p = sum_k c_k q_k, by top-down elimination.

    qs may carry precomputed family members (qs[k] = q_k) to share work
    across many expansions.  Exact: the residual after back-substitution
    must vanish identically.
    """
    if p.is_zero():
        return []
    d = p.degree
    if qs is None:
        qs = _q_ladder(spec, d)
    coeffs = [Fraction(0)] * (d + 1)
    rest = p
    for k in range(d, -1, -1):
        c = rest.coeff(k)
        if c != 0:
            ck = c / qs[k].lead
            coeffs[k] = ck
            rest = rest - ck * qs[k]
    assert rest.is_zero()
    return coeffs


def recurrence_table(spec: FamilySpec, Q: Poly, n_range) -> RecurrenceTable:
    """gamma_{n,j} with Q q_n = sum_j gamma_{n,j} q_{n+j}, for n in n_range.

    n_range is a range object or an int N meaning 0..N inclusive.
    """
    if Q.is_zero():
        raise ValueError("Q must be nonzero")
    if isinstance(n_range, int):
        n_range = range(0, n_range + 1)
    top = max(n_range) + Q.degree
    qs = _q_ladder(spec, top)
    rows: Dict[int, Dict[int, Fraction]] = {}
    for n in n_range:
        c = expand_in_q(spec, Q * qs[n], qs)
        rows[n] = {k - n: v for k, v in enumerate(c) if v != 0}
    return RecurrenceTable(Q=Q, n_range=n_range, rows=rows)


def verify_band(table: RecurrenceTable, s: int) -> bool:
    """True iff the table is banded with symmetric width s: gamma_{n,j} = 0
    for |j| > s on every row, and both extremes gamma_{n,s}, gamma_{n,-s}
    are nonzero on every row with n >= s.

    Needs at least one row with n >= s, otherwise nothing is certified.
    """
    if s < 0:
        return False
    applicable = [n for n in table.n_range if n >= s]
    if not applicable:
        return False
    for n, row in table.rows.items():
        for j, v in row.items():
            if abs(j) > s and v != 0:
                return False
        if n >= s and (table.gamma(n, s) == 0 or table.gamma(n, -s) == 0):
            return False
    return True


@dataclass
class ThreeTermResult:
    nmax: int
    passed: bool
    a: List[Fraction]  # gamma_{n,1}
    b: List[Fraction]  # gamma_{n,0}
    c: List[Fraction]  # gamma_{n,-1}
    failure: Optional[str] = None


def three_term_test(spec: FamilySpec, nmax: int) -> ThreeTermResult:
    """Does x q_n = a_n q_{n+1} + b_n q_n + c_n q_{n-1} hold with c_n != 0?

    Pass is equivalent (by the classical recurrence-to-measure argument) to
    orthogonality with respect to some quasi-definite moment functional.
    Checked exactly on rows 0..nmax.
    """
    table = recurrence_table(spec, Poly.x(), nmax)
    a = [table.gamma(n, 1) for n in range(nmax + 1)]
    b = [table.gamma(n, 0) for n in range(nmax + 1)]
    c = [table.gamma(n, -1) for n in range(nmax + 1)]
    for n, row in table.rows.items():
        for j, v in row.items():
            if j < -1 and v != 0:
                return ThreeTermResult(nmax, False, a, b, c,
                                       failure=f"gamma_({n},{j}) = {rat_str(v)} != 0")
    for n in range(1, nmax + 1):
        if c[n] == 0:
            return ThreeTermResult(nmax, False, a, b, c,
                                   failure=f"c_{n} = 0")
    return ThreeTermResult(nmax, True, a, b, c)


@dataclass
class ObstructionResult:
    obstructed: bool
    witness: Optional[int] = None  # the g with g - u outside G, g - u >= 0
    bands_refuted_up_to: Optional[int] = None


def obstruction_test(spec: FamilySpec, Q: Poly, n_check: int = 20,
                     cross_check: bool = True) -> ObstructionResult:
    """Witness-based impossibility test for banded recurrences with this Q.

    If some g in G has g - u >= 0 and g - u not in G, where u is the lowest
    nonzero power of Q, no banded recurrence exists (for parameters away
    from the integer range 1..maxG).  When obstructed and cross_check is
    set, also refutes every symmetric band s <= n_check directly on the
    computed table.
    """
    if Q.is_zero():
        raise ValueError("Q must be nonzero")
    a = spec.alpha
    if a.denominator == 1 and a <= spec.max_g:
        # integer alpha <= maxG breaks the witness argument: Krall seeds
        # admit Q = x despite witnesses
        raise ValueError(
            "obstruction test needs alpha - maxG != 0, -1, -2, ...")
    u = Q.valuation()
    witness = None
    gset = set(spec.G)
    for g in spec.G:
        if g - u >= 0 and (g - u) not in gset:
            witness = g
            break
    if witness is None:
        return ObstructionResult(False)
    refuted = None
    if cross_check:
        table = recurrence_table(spec, Q, n_check)
        for s in range(n_check + 1):
            if verify_band(table, s):
                raise AssertionError(
                    f"band {s} exists despite obstruction witness g={witness}")
        refuted = n_check
    return ObstructionResult(True, witness=witness, bands_refuted_up_to=refuted)


@dataclass
class AlgebraProbeResult:
    degree_cap: int
    band: int
    n_max: int
    basis: List[Poly]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def algebra_probe(spec: FamilySpec, d: int, band: Optional[int] = None,
                  n_max: Optional[int] = None) -> AlgebraProbeResult:
    """Canonical basis of {Q : deg Q <= d, gamma_{n,j}(Q) = 0 for j < -band,
    all n <= n_max}.

    gamma is linear in Q, so the constraints form an exact homogeneous
    system in the d+1 coefficients of Q; the reduced-echelon nullspace basis
    (pivots in ascending degree, constant polynomial first) is returned.
    Defaults: band = d, n_max = 2d + maxG + 10.
    """
    if d < 0:
        raise ValueError("degree cap must be >= 0")
    B = d if band is None else band
    N = (2 * d + spec.max_g + 10) if n_max is None else n_max
    top = N + d
    qs = _q_ladder(spec, top)
    # column k: expansion table of x^k q_n
    tables: List[List[List[Fraction]]] = []
    for k in range(d + 1):
        mono = Poly.monomial(k)
        tables.append([expand_in_q(spec, mono * qs[n], qs) for n in range(N + 1)])
    rows = []
    for n in range(N + 1):
        for j in range(-n, -B):
            row = []
            for k in range(d + 1):
                c = tables[k][n]
                idx = n + j
                row.append(c[idx] if 0 <= idx < len(c) else Fraction(0))
            rows.append(row)
    if not rows:
        basis = [Poly.monomial(k) for k in range(d + 1)]
    else:
        sol = solve_linear(rows, None)
        basis = [Poly(vec) for vec in sol.nullspace]
    return AlgebraProbeResult(degree_cap=d, band=B, n_max=N, basis=basis)


def reverify_probe(spec: FamilySpec, result: AlgebraProbeResult, extra: int = 10) -> bool:
    """Re-check every probe basis element on a longer table (rows up to
    n_max + extra): no coefficients below -band may appear."""
    N = result.n_max + extra
    for Q in result.basis:
        table = recurrence_table(spec, Q, N)
        for n, row in table.rows.items():
            for j, v in row.items():
                if j < -result.band and v != 0:
                    return False
    return True


@dataclass
class RhoRecurrenceResult:
    rho: int
    band: int
    table: RecurrenceTable
    band_ok: bool  # gamma_{n,j} = 0 beyond the band, every row
    extremes_from: Optional[int]  # first n with both extremes nonzero onward
    passed: bool


def rho_bound(spec: FamilySpec) -> int:
    """max{m, maxG - alpha + 1, alpha} for positive integer alpha <= maxG."""
    alpha = spec.alpha
    if alpha.denominator != 1 or not 1 <= alpha <= spec.max_g:
        raise ValueError("rho is defined for integer alpha in 1..maxG only")
    a = int(alpha)
    return max(spec.m, spec.max_g - a + 1, a)


def rho_recurrence(spec: FamilySpec, p: Poly, nmax: int) -> RhoRecurrenceResult:
    """Build the table for Q = x^rho p and verify the symmetric band
    s = deg p + rho.

    In the integer-alpha range the extreme coefficients gamma_{n,+-s} can
    vanish for finitely many small n (families whose members share a root
    at the origin), so the verdict asks for a tail: both extremes nonzero
    from some n0 <= nmax onward, reported as extremes_from.
    """
    if p.is_zero():
        raise ValueError("p must be nonzero")
    rho = rho_bound(spec)
    Q = Poly.monomial(rho) * p
    s = p.degree + rho
    table = recurrence_table(spec, Q, nmax)
    band_ok = all(v == 0
                  for row in table.rows.values()
                  for j, v in row.items() if abs(j) > s)
    extremes_from = None
    if band_ok and nmax >= s:
        n0 = None
        for n in range(s, nmax + 1):
            if table.gamma(n, s) != 0 and table.gamma(n, -s) != 0:
                if n0 is None:
                    n0 = n
            else:
                n0 = None
        extremes_from = n0
    return RhoRecurrenceResult(rho=rho, band=s, table=table, band_ok=band_ok,
                               extremes_from=extremes_from,
                               passed=band_ok and extremes_from is not None)


# -- table export -----------------------------------------------------


def table_rows_json(table: RecurrenceTable) -> List[dict]:
    out = []
    for n in sorted(table.rows):
        for j in sorted(table.rows[n]):
            out.append({"n": n, "j": j, "gamma": rat_str(table.rows[n][j])})
    return out


def table_to_csv(table: RecurrenceTable) -> str:
    lines = ["n,j,gamma"]
    for row in table_rows_json(table):
        lines.append(f"{row['n']},{row['j']},{row['gamma']}")
    return "\n".join(lines) + "\n"


def table_to_latex(table: RecurrenceTable) -> str:
    """Standalone LaTeX document with the coefficient table."""
    lines = [
        r"\documentclass{article}",
        r"\begin{document}",
        r"\begin{tabular}{rrl}",
        r"$n$ & $j$ & $\gamma_{n,j}$ \\",
        r"\hline",
    ]
    for row in table_rows_json(table):
        g = row["gamma"]
        if "/" in g:
            num, den = g.split("/")
            g = rf"\frac{{{num}}}{{{den}}}"
        lines.append(rf"{row['n']} & {row['j']} & ${g}$ \\")
    lines += [r"\end{tabular}", rf"% $Q = {render(table.Q)}$", r"\end{document}"]
    return "\n".join(lines) + "\n"
