"""Dense exact Gaussian elimination, used only to check the structured solver.

Deliberately naive: row reduction with first-nonzero pivoting over the
rationals, no knowledge of band structure.  Fine for n up to a few dozen.
"""

from dataclasses import dataclass

from .core import identity, reverse_cols, reverse_rows
from .errors import DimensionMismatch, SingularMatrix
from .scalars import Rational, rational


def _copy(M):
    return [[rational(x) for x in row] for row in M]


def _square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("matrix is not square")
    return n


def oracle_det(M):
    n = _square(M)
    a = _copy(M)
    det = Rational(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Rational(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det *= piv
        for r in range(c + 1, n):
            if a[r][c] != 0:
                factor = a[r][c] / piv
                row_r, row_c = a[r], a[c]
                for j in range(c, n):
                    row_r[j] -= factor * row_c[j]
    return det


def _gauss_jordan(M, rhs_cols):
    """Reduce ``[M | R]`` to ``[I | M^-1 R]``; ``rhs_cols`` is a list of rows."""
    n = _square(M)
    a = [row + list(extra) for row, extra in zip(_copy(M), _copy(rhs_cols))]
    width = len(a[0])
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {c + 1})")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        row_c = [x / piv for x in a[c]]
        a[c] = row_c
        for r in range(n):
            if r != c and a[r][c] != 0:
                factor = a[r][c]
                row_r = a[r]
                for j in range(c, width):
                    if row_c[j] != 0:
                        row_r[j] -= factor * row_c[j]
    return [row[n:] for row in a]


def oracle_solve(M, rhs):
    n = _square(M)
    if len(rhs) != n:
        raise DimensionMismatch(f"rhs has length {len(rhs)}, expected {n}")
    return [row[0] for row in _gauss_jordan(M, [[x] for x in rhs])]


def oracle_invert(M):
    return _gauss_jordan(M, identity(_square(M)))


@dataclass(frozen=True)
class ExchangeMatrix:
    """The reversal permutation ``P`` (ones on the anti-diagonal)."""

    n: int

    def dense(self):
        return reverse_rows(identity(self.n))

    def det(self):
        return Rational(-1) ** (self.n // 2)


def exchange_apply(P, M, side):
    """``P @ M`` (side="left", reverses rows) or ``M @ P`` (side="right", reverses columns)."""
    if side == "left":
        if len(M) != P.n:
            raise DimensionMismatch(f"P is {P.n}x{P.n} but M has {len(M)} rows")
        return reverse_rows(M)
    if side == "right":
        if any(len(row) != P.n for row in M):
            raise DimensionMismatch(f"P is {P.n}x{P.n} but M rows differ in length")
        return reverse_cols(M)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")
