"""Breakdown-free bordered LU factorization of cyclic heptadiagonal matrices.

The factors have the shape (``m_i = D_i / alpha_{i-3}``)::

    L: unit diagonal, L[i,i-1] = f_i, L[i,i-2] = e_i, L[i,i-3] = m_i  (rows 1..n-2)
       L[n-1, j] = k_j (j <= n-2),  L[n, j] = h_j (j <= n-1)
    U: U[i,i] = alpha_i, U[i,i+1] = g_i, U[i,i+2] = z_i, U[i,i+3] = C_i
       U[j, n-1] = w_j (j <= n-2),  U[j, n] = v_j (j <= n-1)

and ``u_i = alpha_1 ... alpha_i`` are the leading principal minors.

In exact mode a pivot that comes out identically zero is replaced by the
symbol ``t`` and the computation continues in Q(t).  That is the same as
factoring ``H + t * E_ii``, so ``u_n`` evaluated at ``t = 0`` is still
``det H``.  Float mode has no such rescue and raises
:class:`~heptacyc.errors.PivotBreakdown` instead.
"""

from dataclasses import dataclass, field

from .core import AntiCyclicHeptaMatrix, Rational, zeros
from .errors import PivotBreakdown
from .scalars import DEFAULT_TOLERANCE, T, eval_at_zero, is_zero

MODES = ("exact", "float")


@dataclass(frozen=True)
class Factorization:
    """All recurrence sequences of one factorization.

    Every sequence is a list of length ``n + 1`` indexed by the 1-based
    subscript; slot 0 and subscripts outside a sequence's range hold zero,
    except ``u[0] = 1``.
    """

    matrix: object
    mode: str
    alpha: list
    u: list
    f: list
    e: list
    g: list
    z: list
    k: list
    h: list
    v: list
    w: list
    m: list
    substituted: frozenset = field(default_factory=frozenset)
    op_count: int = 0

    @property
    def n(self):
        return self.matrix.n


def _corner_col_n_minus_1(H, i):
    """H[i, n-1] for rows 1..n-2."""
    n = H.n
    if i == 1:
        return H.entry("B", 1)
    if i == n - 4:
        return H.entry("C", n - 4)
    if i == n - 3:
        return H.entry("A", n - 3)
    if i == n - 2:
        return H.entry("a", n - 2)
    return 0


def _corner_col_n(H, i):
    """H[i, n] for rows 1..n-2."""
    n = H.n
    if i == 1:
        return H.entry("b", 1)
    if i == 2:
        return H.entry("B", 2)
    if i == n - 3:
        return H.entry("C", n - 3)
    if i == n - 2:
        return H.entry("A", n - 2)
    return 0


def _row_n_minus_1(H, j):
    """H[n-1, j] for columns 1..n-2."""
    n = H.n
    return {1: H.entry("A", n - 1), n - 4: H.entry("D", n - 1),
            n - 3: H.entry("B", n - 1), n - 2: H.entry("b", n - 1)}.get(j, 0)


def _row_n(H, j):
    """H[n, j] for columns 1..n-2."""
    n = H.n
    return {1: H.entry("a", n), 2: H.entry("A", n),
            n - 3: H.entry("D", n), n - 2: H.entry("B", n)}.get(j, 0)


def factor(H, mode="exact", tol=DEFAULT_TOLERANCE):
    """Factor a cyclic heptadiagonal matrix.

    Parameters
    ----------
    H : CyclicHeptaMatrix
        An :class:`AntiCyclicHeptaMatrix` is factored through its core.
    mode : {"exact", "float"}
        Exact mode never fails.  Float mode raises ``PivotBreakdown`` when a
        pivot satisfies ``|alpha_i| <= eps_abs + eps_rel * max(1, |d_i|)``.
    tol : Tolerance
        Float-mode thresholds.
    """
    if isinstance(H, AntiCyclicHeptaMatrix):
        H = H.core
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, not {mode!r}")
    n = H.n
    if mode == "float":
        conv = float
        zero, one = 0.0, 1.0
    else:
        conv = Rational
        zero, one = Rational(0), Rational(1)

    def get(fam, i):
        return conv(H.entry(fam, i))

    d = [zero] + [conv(x) for x in H.d]
    a = [zero] + [conv(x) for x in H.a]
    A = [zero] + [conv(x) for x in H.A]
    C = [zero] + [conv(x) for x in H.C]
    b = [zero] + [conv(x) for x in H.b]
    B = [zero] + [conv(x) for x in H.B]
    D = [zero] + [conv(x) for x in H.D]
    # U keeps C_i only while column i+3 is inside the band part
    for i in range(n - 4, n + 1):
        C[i] = zero

    alpha = [zero] * (n + 1)
    u = [zero] * (n + 1)
    f, e, g, z, k, h, v, w, m = ([zero] * (n + 1) for _ in range(9))
    u[0] = one
    substituted = set()
    ops = 0

    def pivot(i, value):
        if is_zero(value, scale=d[i], tol=tol):
            if mode == "float":
                raise PivotBreakdown(i, value)
            substituted.add(i)
            return T
        return value

    # band rows 1..n-2
    for i in range(1, n - 1):
        if i >= 4:
            m[i] = D[i] / alpha[i - 3]
            ops += 1
        if i >= 3:
            e[i] = (B[i] - m[i] * g[i - 3]) / alpha[i - 2]
            ops += 2
        if i >= 2:
            f[i] = (b[i] - m[i] * z[i - 3] - e[i] * g[i - 2]) / alpha[i - 1]
            ops += 3
        alpha[i] = pivot(i, d[i] - m[i] * C[i - 3] - e[i] * z[i - 2] - f[i] * g[i - 1])
        u[i] = alpha[i] * u[i - 1]
        ops += 4
        if i <= n - 3:
            g[i] = a[i] - f[i] * z[i - 1] - e[i] * C[i - 2]
            ops += 2
        if i <= n - 4:
            z[i] = A[i] - f[i] * C[i - 1]
            ops += 1
        w[i] = conv(_corner_col_n_minus_1(H, i)) - m[i] * w[i - 3] - e[i] * w[i - 2] - f[i] * w[i - 1]
        v[i] = conv(_corner_col_n(H, i)) - m[i] * v[i - 3] - e[i] * v[i - 2] - f[i] * v[i - 1]
        ops += 6

    # bordered rows n-1 and n
    for j in range(1, n - 1):
        k[j] = (conv(_row_n_minus_1(H, j)) - k[j - 1] * g[j - 1]
                - k[j - 2] * z[j - 2] - k[j - 3] * C[j - 3]) / alpha[j]
        h[j] = (conv(_row_n(H, j)) - h[j - 1] * g[j - 1]
                - h[j - 2] * z[j - 2] - h[j - 3] * C[j - 3]) / alpha[j]
        ops += 8

    v[n - 1] = get("a", n - 1) - _dot(k, v, n - 2)
    alpha[n - 1] = pivot(n - 1, d[n - 1] - _dot(k, w, n - 2))
    u[n - 1] = alpha[n - 1] * u[n - 2]
    h[n - 1] = (get("b", n) - _dot(h, w, n - 2)) / alpha[n - 1]
    alpha[n] = pivot(n, d[n] - _dot(h, v, n - 1))
    u[n] = alpha[n] * u[n - 1]
    ops += 3 * (n - 2) + (n - 1) + 3

    return Factorization(
        matrix=H, mode=mode, alpha=alpha, u=u, f=f, e=e, g=g, z=z,
        k=k, h=h, v=v, w=w, m=m,
        substituted=frozenset(substituted), op_count=ops,
    )


def _dot(x, y, upto):
    acc = x[0] * 0
    for j in range(1, upto + 1):
        acc = acc + x[j] * y[j]
    return acc


def determinant(H, mode="exact", tol=DEFAULT_TOLERANCE, F=None):
    """``det H`` as ``u_n`` at ``t = 0`` (a float in float mode)."""
    if F is None:
        F = factor(H, mode=mode, tol=tol)
    if F.mode == "float":
        return F.u[F.n]
    return eval_at_zero(F.u[F.n])


def leading_minors(F):
    """``[u_0(0), ..., u_n(0)]``; entry ``i <= n-2`` is the i-th leading minor of H."""
    if F.mode == "float":
        return list(F.u)
    return [eval_at_zero(x) for x in F.u]


def op_count(F):
    return F.op_count


@dataclass(frozen=True)
class LUPair:
    L: list
    U: list
    perturbation: frozenset


def reconstruct_lu(F, n=None):
    """Materialize dense L and U; entries stay in Q(t) when pivots were substituted."""
    n = F.n if n is None else n
    if n != F.n:
        raise ValueError(f"factorization has order {F.n}, not {n}")
    H = F.matrix
    L = zeros(n)
    U = zeros(n)
    for i in range(1, n + 1):
        L[i - 1][i - 1] = Rational(1)
        U[i - 1][i - 1] = F.alpha[i]
    for i in range(2, n - 1):
        L[i - 1][i - 2] = F.f[i]
    for i in range(3, n - 1):
        L[i - 1][i - 3] = F.e[i]
    for i in range(4, n - 1):
        L[i - 1][i - 4] = F.m[i]
    for j in range(1, n - 1):
        L[n - 2][j - 1] = F.k[j]
    for j in range(1, n):
        L[n - 1][j - 1] = F.h[j]
    for i in range(1, n - 2):
        U[i - 1][i] = F.g[i]
    for i in range(1, n - 3):
        U[i - 1][i + 1] = F.z[i]
    for i in range(1, n - 4):
        U[i - 1][i + 2] = _as_mode(H.entry("C", i), F.mode)
    for j in range(1, n - 1):
        U[j - 1][n - 2] = F.w[j]
    for j in range(1, n):
        U[j - 1][n - 1] = F.v[j]
    return LUPair(L=L, U=U, perturbation=F.substituted)


def _as_mode(x, mode):
    return float(x) if mode == "float" else x
