"""End-to-end cross-check of the structured algorithm against the dense oracle."""

from dataclasses import dataclass, field

from .core import AntiCyclicHeptaMatrix, matmul, to_dense
from .errors import SingularMatrix
from .factorization import determinant, factor, leading_minors, reconstruct_lu
from .oracle import oracle_det, oracle_invert, oracle_solve
from .scalars import T, Rational
from .solve import anti_determinant, anti_invert, invert, solve


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)
    substituted: frozenset = frozenset()

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))

    def table(self):
        width = max(len(c.name) for c in self.checks)
        lines = [f"{c.name:<{width}}  {'PASS' if c.ok else 'FAIL'}  {c.detail}".rstrip()
                 for c in self.checks]
        verdict = "all checks passed" if self.ok else "MISMATCH"
        lines.append(f"{verdict} (substituted pivots: {sorted(self.substituted) or 'none'})")
        return "\n".join(lines)


def first_difference(X, Y):
    """``(i, j, x, y)`` for the first 1-based position where two matrices differ."""
    if len(X) != len(Y):
        return (len(X), len(Y), "rows", "rows")
    for i, (rx, ry) in enumerate(zip(X, Y), start=1):
        if len(rx) != len(ry):
            return (i, 0, len(rx), len(ry))
        for j, (x, y) in enumerate(zip(rx, ry), start=1):
            if x != y:
                return (i, j, x, y)
    return None


def _compare(report, name, got, want):
    diff = first_difference(got, want)
    if diff is None:
        report.add(name, True)
    else:
        i, j, x, y = diff
        report.add(name, False, f"first difference at ({i},{j}): {x} != {y}")


def perturbed_dense(H, substituted):
    """``dense(H) + t * sum E_ii`` over the substituted pivots."""
    M = to_dense(H)
    for i in substituted:
        M[i - 1][i - 1] = M[i - 1][i - 1] + T
    return M


def _expect_same(report, name, structured, oracle):
    """Run two callables; both must raise SingularMatrix or return equal values."""
    try:
        want = oracle()
    except SingularMatrix:
        want = SingularMatrix
    try:
        got = structured()
    except SingularMatrix:
        got = SingularMatrix
    except ArithmeticError as exc:
        report.add(name, False, f"structured path raised: {exc}")
        return
    if want is SingularMatrix or got is SingularMatrix:
        ok = want is got
        report.add(name, ok, "" if ok else
                   f"oracle {'singular' if want is SingularMatrix else 'regular'}, "
                   f"structured {'singular' if got is SingularMatrix else 'regular'}")
        return
    if isinstance(want, list) and want and isinstance(want[0], list):
        _compare(report, name, got, want)
    else:
        _compare(report, name, [list(got)], [list(want)])


def verify_matrix(M, factor_fn=factor, minors=False):
    """Compare every structured result on ``M`` with the oracle.

    ``factor_fn`` exists so tests can inject a deliberately broken
    factorization.  ``minors=True`` also checks each leading minor up to
    order ``n - 2`` (quartic cost in ``n``).
    """
    anti = isinstance(M, AntiCyclicHeptaMatrix)
    H = M.core if anti else M
    n = H.n
    dense_H = to_dense(H)
    dense_M = to_dense(M)
    report = VerifyReport()

    F = factor_fn(H)
    report.substituted = F.substituted
    report.add("factor", True, f"{len(F.substituted)} substituted pivot(s)")

    lu = reconstruct_lu(F)
    _compare(report, "L*U = H + t*E", matmul(lu.L, lu.U), perturbed_dense(H, F.substituted))

    bad = next((i for i in range(1, n + 1) if F.u[i] != F.alpha[i] * F.u[i - 1]), None)
    report.add("u_i = alpha_i*u_(i-1)", bad is None, "" if bad is None else f"fails at i = {bad}")

    if minors:
        got = leading_minors(F)
        want = [Rational(1)] + [oracle_det([row[:i] for row in dense_H[:i]]) for i in range(1, n - 1)]
        _compare(report, "leading minors", [got[: n - 1]], [want])

    det_oracle = oracle_det(dense_M)
    if anti:
        det_struct = anti_determinant(M, F=F)
        report.add("anti determinant", det_struct == det_oracle, f"{det_struct} vs oracle {det_oracle}")
    else:
        det_struct = determinant(H, F=F)
        report.add("determinant", det_struct == det_oracle, f"{det_struct} vs oracle {det_oracle}")

    rhs = [Rational(i) for i in range(1, n + 1)]
    if anti:
        # M x = r  <=>  H (P x) = r
        _expect_same(report, "solve",
                     lambda: list(reversed(solve(F, H, rhs).solution)),
                     lambda: oracle_solve(dense_M, rhs))
        _expect_same(report, "anti inverse",
                     lambda: anti_invert(M, F=F),
                     lambda: oracle_invert(dense_M))
    else:
        _expect_same(report, "solve",
                     lambda: solve(F, H, rhs).solution,
                     lambda: oracle_solve(dense_M, rhs))
        _expect_same(report, "inverse",
                     lambda: invert(H, F=F),
                     lambda: oracle_invert(dense_M))
    return report
