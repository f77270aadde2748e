"""Determinants of polynomial matrices and exact linear algebra.

Small determinants go through cofactor expansion; anything larger uses the
Bareiss fraction-free scheme, whose interior divisions are exact over a
polynomial ring.  A separate routine handles matrices of rational functions
(used only for cross-checks) and a Gaussian solver over the rationals backs
the operator-existence probe.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polynomials import Polynomial, RationalFunction

_COFACTOR_LIMIT = 5  # cofactor expansion up to this size, Bareiss beyond


class PolyMatrix:
    """Rectangular matrix with rational-function entries, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[RationalFunction | Polynomial | int | Fraction]]):
        built: list[tuple[RationalFunction, ...]] = []
        width = None
        for row in rows:
            entries = tuple(_as_rf(e) for e in row)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ValueError("ragged rows in matrix")
            built.append(entries)
        self.rows = tuple(built)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int) -> RationalFunction:
        return self.rows[i][j]

    def polynomial_rows(self) -> list[list[Polynomial]]:
        """Entries as polynomials; raises if any denominator survives."""
        out = []
        for i, row in enumerate(self.rows):
            line = []
            for j, e in enumerate(row):
                if not e.is_polynomial:
                    raise ValueError(f"entry ({i},{j}) is not a polynomial")
                line.append(e.as_polynomial())
            out.append(line)
        return out


def _as_rf(entry) -> RationalFunction:
    if isinstance(entry, RationalFunction):
        return entry
    return RationalFunction(entry)


def poly_det(matrix: PolyMatrix) -> Polynomial:
    """Determinant of a square matrix with polynomial entries.

    Callers clear denominators first; a surviving rational entry is an error.
    The empty matrix has determinant 1.
    """
    if not matrix.is_square:
        raise ValueError(f"determinant of a {matrix.nrows}x{matrix.ncols} matrix")
    n = matrix.nrows
    if n == 0:
        return Polynomial.one()
    rows = matrix.polynomial_rows()
    if n <= _COFACTOR_LIMIT:
        return _cofactor_det(rows)
    return _bareiss_det(rows)


def _cofactor_det(rows: list[list[Polynomial]]) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = Polynomial.zero()
    for j, top in enumerate(rows[0]):
        if top.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = top * _cofactor_det(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def _bareiss_det(rows: list[list[Polynomial]]) -> Polynomial:
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev)
            m[i][k] = Polynomial.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def rational_det(matrix: PolyMatrix) -> RationalFunction:
    """Cofactor determinant over the rational-function field.

    Slower than :func:`poly_det`; kept for independent cross-checks of the
    denominator-cleared computations.
    """
    if not matrix.is_square:
        raise ValueError(f"determinant of a {matrix.nrows}x{matrix.ncols} matrix")
    if matrix.nrows == 0:
        return RationalFunction.one()
    return _rf_cofactor([list(row) for row in matrix.rows])


def _rf_cofactor(rows: list[list[RationalFunction]]) -> RationalFunction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = RationalFunction.zero()
    for j, top in enumerate(rows[0]):
        if top.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = top * _rf_cofactor(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def solve_linear_system(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[list[Fraction], int] | None:
    """Solve A x = b exactly by Gaussian elimination.

    Returns ``(particular_solution, nullity)`` with free variables pinned to
    zero, or ``None`` when the system is inconsistent.
    """
    nrows = len(rows)
    if nrows != len(rhs):
        raise ValueError("rhs length does not match row count")
    ncols = len(rows[0]) if nrows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if aug[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [vi - factor * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for row_idx, col in enumerate(pivots):
        solution[col] = aug[row_idx][ncols]
    return solution, ncols - len(pivots)
