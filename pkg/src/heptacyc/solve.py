"""Linear solves and inverses on top of :mod:`heptacyc.factorization`."""

from dataclasses import dataclass

from .core import AntiCyclicHeptaMatrix, apply, reverse_rows
from .errors import LengthMismatch, PoleAtZero, SingularMatrix
from .factorization import determinant, factor
from .scalars import Rational, eval_at_zero, rational


@dataclass(frozen=True)
class SolveReport:
    solution: list
    substituted_pivots: frozenset
    residual_checked: bool


def _forward(F, r):
    n = F.n
    f, e, m, k, h = F.f, F.e, F.m, F.k, F.h
    y = [None] + list(r)
    for i in range(2, n - 1):
        acc = y[i] - f[i] * y[i - 1]
        if i >= 3:
            acc = acc - e[i] * y[i - 2]
        if i >= 4:
            acc = acc - m[i] * y[i - 3]
        y[i] = acc
    acc = y[n - 1]
    for j in range(1, n - 1):
        acc = acc - k[j] * y[j]
    y[n - 1] = acc
    acc = y[n]
    for j in range(1, n):
        acc = acc - h[j] * y[j]
    y[n] = acc
    return y


def _backward(F, y):
    n = F.n
    alpha, g, z, w, v = F.alpha, F.g, F.z, F.w, F.v
    C = F.matrix.C
    if F.mode == "float":
        C = [float(c) for c in C]
    x = [None] * (n + 1)
    x[n] = y[n] / alpha[n]
    x[n - 1] = (y[n - 1] - v[n - 1] * x[n]) / alpha[n - 1]
    x[n - 2] = (y[n - 2] - w[n - 2] * x[n - 1] - v[n - 2] * x[n]) / alpha[n - 2]
    for i in range(n - 3, 0, -1):
        acc = y[i] - g[i] * x[i + 1] - w[i] * x[n - 1] - v[i] * x[n]
        if i <= n - 4:
            acc = acc - z[i] * x[i + 2]
        if i <= n - 5:
            acc = acc - C[i - 1] * x[i + 3]
        x[i] = acc / alpha[i]
    return x[1:]


def solve(F, H, rhs, check=True):
    """Solve ``H x = rhs`` using a factorization ``F`` of ``H``.

    In exact mode the components are carried in Q(t) and evaluated at
    ``t = 0`` only at the end.  ``check`` verifies ``H x = rhs`` exactly.
    """
    if isinstance(H, AntiCyclicHeptaMatrix):
        raise TypeError("solve expects the cyclic matrix; use the core of an anti matrix")
    n = H.n
    if len(rhs) != n:
        raise LengthMismatch(f"rhs has length {len(rhs)}, expected {n}")
    if F.mode == "float":
        x = _backward(F, _forward(F, [float(r) for r in rhs]))
        return SolveReport(x, F.substituted, False)
    if determinant(H, F=F) == 0:
        raise SingularMatrix("determinant is zero")
    rhs = [rational(r) for r in rhs]
    raw = _backward(F, _forward(F, rhs))
    x = []
    for i, xi in enumerate(raw, start=1):
        try:
            x.append(eval_at_zero(xi))
        except PoleAtZero:
            raise SingularMatrix(
                f"component x_{i} has a pole at t = 0 although det H != 0; "
                "check the factorization with reconstruct_lu"
            ) from None
    if check and apply(H, x) != rhs:
        raise ArithmeticError("residual check failed: H x != rhs")
    return SolveReport(x, F.substituted, check)


def invert(H, F=None, check=False):
    """Exact inverse as a dense row list, built from ``n`` unit-vector solves."""
    if isinstance(H, AntiCyclicHeptaMatrix):
        raise TypeError("use anti_invert for anti-cyclic matrices")
    if F is None:
        F = factor(H)
    n = H.n
    if F.mode == "exact" and determinant(H, F=F) == 0:
        raise SingularMatrix("determinant is zero")
    zero, one = (0.0, 1.0) if F.mode == "float" else (Rational(0), Rational(1))
    cols = []
    for j in range(n):
        unit = [zero] * n
        unit[j] = one
        cols.append(solve(F, H, unit, check=check).solution)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def anti_invert(M, F=None):
    """Inverse of ``M = H P`` as ``P H^-1``, i.e. ``H^-1`` with its rows reversed."""
    return reverse_rows(invert(M.core, F=F))


def anti_determinant(M, F=None):
    """``det M = det(core) * (-1)^(n // 2)``."""
    sign = -1 if (M.n // 2) % 2 else 1
    return sign * determinant(M.core, F=F)
