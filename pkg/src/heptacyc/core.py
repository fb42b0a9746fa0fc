"""Cyclic and anti-cyclic heptadiagonal matrices.

A cyclic heptadiagonal matrix of order ``n >= 8`` is stored as seven
coefficient families, each of length ``n`` and indexed 1..n::

    H[i, i]   = d_i        H[i, i-1] = b_i
    H[i, i+1] = a_i        H[i, i-2] = B_i
    H[i, i+2] = A_i        H[i, i-3] = D_i
    H[i, i+3] = C_i

The wrap-around corners reuse the band slots that would otherwise fall
outside the matrix::

    H[1, n] = b_1      H[1, n-1] = B_1     H[2, n] = B_2
    H[n, 1] = a_n      H[n, 2]   = A_n     H[n-1, 1] = A_{n-1}

``D_1, D_2, D_3`` and ``C_{n-2}, C_{n-1}, C_n`` have no position and must be
zero.  An anti-cyclic matrix is a cyclic one with its columns reversed.

Dense matrices are plain lists of row lists.
"""

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    LengthMismatch,
    NotHeptaStructured,
    ReservedSlotNonzero,
)
from .scalars import Rational, rational

FAMILIES = ("d", "a", "A", "C", "b", "B", "D")
MIN_ORDER = 8


def placements(n):
    """Yield ``(family, index, row, col)`` for every stored slot, 1-based."""
    for i in range(1, n + 1):
        yield "d", i, i, i
    for i in range(1, n):
        yield "a", i, i, i + 1
    for i in range(1, n - 1):
        yield "A", i, i, i + 2
    for i in range(1, n - 2):
        yield "C", i, i, i + 3
    for i in range(2, n + 1):
        yield "b", i, i, i - 1
    for i in range(3, n + 1):
        yield "B", i, i, i - 2
    for i in range(4, n + 1):
        yield "D", i, i, i - 3
    yield "b", 1, 1, n
    yield "B", 1, 1, n - 1
    yield "B", 2, 2, n
    yield "A", n - 1, n - 1, 1
    yield "a", n, n, 1
    yield "A", n, n, 2


def reserved_slots(n):
    return [("D", 1), ("D", 2), ("D", 3), ("C", n - 2), ("C", n - 1), ("C", n)]


@dataclass(frozen=True)
class CyclicHeptaMatrix:
    """Validated cyclic heptadiagonal matrix; use :func:`from_bands` to build one.

    Each family is a tuple of ``n`` Rationals, position ``i-1`` holding the
    1-based coefficient ``i``.
    """

    n: int
    d: tuple
    a: tuple
    A: tuple
    C: tuple
    b: tuple
    B: tuple
    D: tuple

    def band(self, family):
        return getattr(self, family)

    def entry(self, family, i):
        """1-based coefficient lookup, e.g. ``entry("A", n - 1)``."""
        return getattr(self, family)[i - 1]

    def to_dense(self):
        return to_dense(self)

    def bands(self):
        return {f: getattr(self, f) for f in FAMILIES}


@dataclass(frozen=True)
class AntiCyclicHeptaMatrix:
    """``M = core @ P``: the cyclic ``core`` with its column order reversed."""

    core: CyclicHeptaMatrix

    @property
    def n(self):
        return self.core.n

    def to_dense(self):
        return reverse_cols(to_dense(self.core))


def from_bands(n, d, a, A, C, b, B, D):
    if n < MIN_ORDER:
        raise DimensionTooSmall(f"order n = {n} is below the minimum {MIN_ORDER}")
    given = dict(zip(FAMILIES, (d, a, A, C, b, B, D)))
    fams = {}
    for name, seq in given.items():
        seq = tuple(rational(x) for x in seq)
        if len(seq) != n:
            raise LengthMismatch(
                f"family {name!r} has length {len(seq)}, expected n = {n}"
            )
        fams[name] = seq
    for name, i in reserved_slots(n):
        if fams[name][i - 1] != 0:
            raise ReservedSlotNonzero(name, i, fams[name][i - 1])
    return CyclicHeptaMatrix(n=n, **fams)


def zeros(rows, cols=None):
    cols = rows if cols is None else cols
    return [[Rational(0)] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n)
    for i in range(n):
        m[i][i] = Rational(1)
    return m


def to_dense(H):
    if isinstance(H, AntiCyclicHeptaMatrix):
        return H.to_dense()
    m = zeros(H.n)
    for fam, i, r, c in placements(H.n):
        m[r - 1][c - 1] = H.entry(fam, i)
    return m


def from_dense(M, kind="cyclic"):
    """Recover the band form of a dense matrix, checking every other entry is zero.

    For ``kind="anti"`` the columns are reversed first and the result is
    wrapped as an :class:`AntiCyclicHeptaMatrix`.
    """
    if kind not in ("cyclic", "anti"):
        raise ValueError(f"kind must be 'cyclic' or 'anti', not {kind!r}")
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("matrix is not square")
    if n < MIN_ORDER:
        raise DimensionTooSmall(f"order n = {n} is below the minimum {MIN_ORDER}")
    M = [[rational(x) for x in row] for row in M]
    if kind == "anti":
        M = reverse_cols(M)
    fams = {f: [Rational(0)] * n for f in FAMILIES}
    covered = set()
    for fam, i, r, c in placements(n):
        fams[fam][i - 1] = M[r - 1][c - 1]
        covered.add((r, c))
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            if (r, c) not in covered and M[r - 1][c - 1] != 0:
                if kind == "anti":
                    raise NotHeptaStructured(r, n + 1 - c, M[r - 1][c - 1])
                raise NotHeptaStructured(r, c, M[r - 1][c - 1])
    H = from_bands(n, *(fams[f] for f in FAMILIES))
    return AntiCyclicHeptaMatrix(H) if kind == "anti" else H


def apply(H, x):
    """Matrix-vector product touching only the ``7n - 6`` stored entries."""
    if isinstance(H, AntiCyclicHeptaMatrix):
        return apply(H.core, list(reversed(x)))
    n = H.n
    if len(x) != n:
        raise LengthMismatch(f"vector has length {len(x)}, expected {n}")
    y = [Rational(0)] * n
    for fam, i, r, c in placements(n):
        v = H.entry(fam, i)
        if v != 0:
            y[r - 1] = y[r - 1] + v * x[c - 1]
    return y


# -- dense helpers ------------------------------------------------------------

def reverse_rows(M):
    return [list(row) for row in reversed(M)]


def reverse_cols(M):
    return [list(reversed(row)) for row in M]


def matmul(X, Y):
    """Dense product that skips zero entries of ``X`` and ``Y``.

    Works for any entries supporting ``*``/``+``, including RatFunc.  The
    sparse skip keeps banded-times-banded products cheap.
    """
    if not X:
        return []
    inner = len(X[0])
    if len(Y) != inner:
        raise DimensionMismatch(f"cannot multiply {len(X)}x{inner} by {len(Y)}x?")
    cols = len(Y[0]) if Y else 0
    y_rows = [[(j, v) for j, v in enumerate(row) if v != 0] for row in Y]
    out = []
    for row in X:
        acc = [Rational(0)] * cols
        for k, xv in enumerate(row):
            if xv == 0:
                continue
            for j, yv in y_rows[k]:
                acc[j] = acc[j] + xv * yv
        out.append(acc)
    return out


def matvec(M, x):
    return [sum((v * xi for v, xi in zip(row, x) if v != 0), Rational(0)) for row in M]
