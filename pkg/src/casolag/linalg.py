"""Exact linear algebra over Fraction: Gauss-Jordan, nullspaces, determinants.

Everything here is deterministic.  Pivoting always takes the first row with a
nonzero entry in the current column (no magnitude heuristics: over Fraction
any nonzero pivot is exact), so reduced row echelon form, and with it every
particular solution and nullspace basis, is a canonical function of the
input.  The probing code upstream relies on that canonicity to compare bases
across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .poly import Poly, as_rat


class InconsistentSystem(Exception):
    """Raised when A*x = b has no solution; carries the offending row."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"inconsistent system: contradiction in reduced row {row}")


@dataclass
class LinearSolution:
    """Solution set of a linear system in RREF-canonical coordinates.

    particular is None for homogeneous solves requested without a right-hand
    side.  nullspace holds one basis vector per free column: entry 1 in the
    free column, the negated reduced-column entries in the pivot positions.
    """

    particular: Optional[List[Fraction]]
    nullspace: List[List[Fraction]]
    pivot_columns: List[int] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return self.particular is not None and not self.nullspace


def _rref(rows: List[List[Fraction]], ncols: int):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_linear(A: Sequence[Sequence], b: Optional[Sequence] = None) -> LinearSolution:
    """Solve A*x = b exactly (b=None solves the homogeneous system).

    Raises InconsistentSystem when no solution exists.  The nullspace basis
    is the canonical RREF basis, one vector per free column in column order.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    homogeneous = b is None
    rows = []
    for i in range(m):
        row = [as_rat(v) for v in A[i]]
        if len(row) != n:
            raise ValueError("ragged matrix")
        row.append(Fraction(0) if homogeneous else as_rat(b[i]))
        rows.append(row)

    pivots = _rref(rows, n)

    for i in range(len(rows)):
        if all(v == 0 for v in rows[i][:n]) and rows[i][n] != 0:
            raise InconsistentSystem(i)

    particular = None
    if not homogeneous:
        particular = [Fraction(0)] * n
        for r, c in enumerate(pivots):
            particular[c] = rows[r][n]

    pivot_set = set(pivots)
    nullspace = []
    for c in range(n):
        if c in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[c] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][c]
        nullspace.append(vec)

    return LinearSolution(particular=particular, nullspace=nullspace,
                          pivot_columns=list(pivots))


def det_rat(M: Sequence[Sequence]) -> Fraction:
    """Determinant of a square Fraction matrix by fraction-free-ish elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    rows = [[as_rat(v) for v in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def det_poly(M: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square Poly matrix (cofactor expansion).

    Factorial cost, fine for the small Casoratian blocks this package builds
    (the group sizes in play stay in single digits).
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Poly.one()
    cols = list(range(n))

    def minor_det(r: int, active: tuple) -> Poly:
        if len(active) == 1:
            return M[r][active[0]]
        acc = Poly.zero()
        sign = 1
        for idx, c in enumerate(active):
            entry = M[r][c]
            if not entry.is_zero():
                rest = active[:idx] + active[idx + 1:]
                term = entry * minor_det(r + 1, rest)
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        return acc

    return minor_det(0, tuple(cols))
