import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heptacyc.bandfile import load_band_file
from heptacyc.core import FAMILIES, from_bands, matmul, reserved_slots, to_dense
from heptacyc.errors import PivotBreakdown
from heptacyc.factorization import (
    determinant,
    factor,
    leading_minors,
    op_count,
    reconstruct_lu,
)
from heptacyc.generate import generate
from heptacyc.oracle import oracle_det
from heptacyc.scalars import T, Rational, RatFunc, Tolerance
from heptacyc.verify import perturbed_dense

from helpers import diagonal, identity_bands, random_hepta


def _has_t(x):
    return isinstance(x, RatFunc)


def test_identity_factorization():
    F = factor(identity_bands(8))
    assert F.alpha[1:] == [1] * 8
    for name in ("f", "e", "g", "z", "k", "h", "v", "w", "m"):
        assert all(x == 0 for x in getattr(F, name)), name
    assert F.u[8] == 1
    assert F.substituted == frozenset()


def test_diagonal_determinant():
    F = factor(diagonal(8, range(2, 10)))
    assert F.u[8] == 362880
    assert leading_minors(factor(diagonal(8, [2] * 8))) == [2**i for i in range(9)]


def test_example_determinant(hepta_A, dense_A):
    assert determinant(hepta_A) == Rational(-2686365)
    assert determinant(hepta_A) == oracle_det(dense_A)


def test_example_reconstruction(hepta_A, dense_A):
    F = factor(hepta_A)
    lu = reconstruct_lu(F)
    assert matmul(lu.L, lu.U) == dense_A
    # L is unit lower, U is upper
    for i in range(10):
        assert lu.L[i][i] == 1
        assert all(lu.L[i][j] == 0 for j in range(i + 1, 10))
        assert all(lu.U[i][j] == 0 for j in range(i))


def test_singular_fixture(fixtures_dir):
    H = load_band_file(fixtures_dir / "singular.json")
    F = factor(H)
    assert F.substituted == frozenset({10})
    assert determinant(H, F=F) == 0
    assert oracle_det(to_dense(H)) == 0


def test_substituted_reconstruction_keeps_perturbation():
    for zp in (1, 2, 3):
        H = generate(14, seed=zp, zero_pivots=zp).to_matrix()
        F = factor(H)
        assert len(F.substituted) == zp
        lu = reconstruct_lu(F)
        assert lu.perturbation == F.substituted
        assert matmul(lu.L, lu.U) == perturbed_dense(H, F.substituted)
        assert determinant(H, F=F) == oracle_det(to_dense(H))


def test_no_t_without_substitution():
    H = random_hepta(16, seed=3, low=1, high=9)
    F = factor(H)
    if F.substituted:
        pytest.skip("draw happened to hit a zero pivot")
    for name in ("alpha", "u", "f", "e", "g", "z", "k", "h", "v", "w", "m"):
        assert not any(_has_t(x) for x in getattr(F, name)), name


def test_all_zero_matrix_factors():
    zero = [0] * 8
    H = from_bands(8, *([zero] * 7))
    F = factor(H)
    assert F.substituted == frozenset(range(1, 9))
    assert determinant(H, F=F) == 0


def test_reconstruct_rejects_wrong_order(hepta_A):
    with pytest.raises(ValueError):
        reconstruct_lu(factor(hepta_A), n=9)


def test_unknown_mode(hepta_A):
    with pytest.raises(ValueError):
        factor(hepta_A, mode="fast")


# -- float mode -------------------------------------------------------------

def test_float_determinant_close_to_exact(hepta_A):
    det = determinant(hepta_A, mode="float")
    assert abs(det - (-2686365)) <= 1e-6 * 2686365


def test_float_breakdown_is_raised(fixtures_dir):
    H = load_band_file(fixtures_dir / "singular.json")
    with pytest.raises(PivotBreakdown) as info:
        factor(H, mode="float")
    assert info.value.index == 10
    with pytest.raises(PivotBreakdown) as info:
        factor(from_bands(8, *([[0] * 8] * 7)), mode="float")
    assert info.value.index == 1


def test_float_tolerance_is_configurable():
    H = diagonal(8, [Rational(1, 1000)] * 8)
    factor(H, mode="float")
    with pytest.raises(PivotBreakdown):
        factor(H, mode="float", tol=Tolerance(eps_abs=0.01, eps_rel=0.0))


# -- operation counts -------------------------------------------------------

def test_op_count_baseline():
    counts = {n: op_count(factor(identity_bands(n))) for n in (8, 9, 10, 12)}
    assert counts == {8: 176, 9: 207, 10: 238, 12: 300}


def test_op_count_is_linear():
    def count(n):
        bands = {f: [1] * n for f in FAMILIES}
        bands["d"] = [20] * n
        for fam, i in reserved_slots(n):
            bands[fam][i - 1] = 0
        return op_count(factor(from_bands(n, *(bands[f] for f in FAMILIES)), mode="float"))

    ratio = count(2000) / count(1000)
    assert 1.8 <= ratio <= 2.2


@settings(max_examples=20, deadline=None)
@given(st.integers(8, 30), st.integers(0, 10**6))
def test_op_count_depends_only_on_n(n, seed):
    assert op_count(factor(random_hepta(n, seed))) == op_count(factor(identity_bands(n)))


# -- properties ---------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(8, 18), st.integers(0, 10**6))
def test_determinant_matches_oracle(n, seed):
    H = random_hepta(n, seed)
    assert determinant(H) == oracle_det(to_dense(H))


@settings(max_examples=30, deadline=None)
@given(st.integers(8, 16), st.integers(0, 10**6), st.integers(0, 3))
def test_reconstruction_and_recurrence(n, seed, zp):
    H = generate(n, seed, zero_pivots=zp).to_matrix()
    F = factor(H)
    lu = reconstruct_lu(F)
    assert matmul(lu.L, lu.U) == perturbed_dense(H, F.substituted)
    assert F.u[0] == 1
    for i in range(1, n + 1):
        assert F.u[i] == F.alpha[i] * F.u[i - 1]


@settings(max_examples=20, deadline=None)
@given(st.integers(8, 14), st.integers(0, 10**6))
def test_leading_minors_match_oracle(n, seed):
    H = random_hepta(n, seed, low=-3, high=3)
    got = leading_minors(factor(H))
    dense = to_dense(H)
    for i in range(1, n - 1):
        assert got[i] == oracle_det([row[:i] for row in dense[:i]])


def test_substituted_pivot_is_t():
    rng = random.Random(5)
    for _ in range(10):
        H = generate(12, seed=rng.randint(0, 10**6), zero_pivots=1).to_matrix()
        F = factor(H)
        (i,) = F.substituted
        assert F.alpha[i] == T
        assert not any(_has_t(x) for x in F.alpha[1:i])
