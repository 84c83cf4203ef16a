import numpy as np
import pytest
from hypothesis import given, strategies as st

from rankmetric import DegenerateCodeError, InvariantViolation, RankCode, SingularMatrixError, field, linalg
from rankmetric import constructions as K
from rankmetric import rank_codes as R

from oracles import OField, gen_weights_subcodes, is_minimal, rank_weight, support


def random_code(ctx, k, n, seed):
    rng = np.random.default_rng(seed)
    while True:
        G = rng.integers(0, ctx.order, (k, n))
        if linalg.rank(ctx, G) == k:
            return RankCode(ctx, G)


def support_set(ctx, S):
    F = OField(ctx.p, ctx.h, ctx.m)
    if S.dim == 0:
        return {tuple([0] * S.ambient)}
    return F.fq_span(S.basis.tolist())


# -- weights and supports -----------------------------------------------------


def test_rank_weight_examples(f16):
    g = f16.g
    assert R.rank_weight(f16, [0, 0, 0, 0]) == 0
    assert R.rank_weight(f16, [1, 1, 0, 1]) == 1
    assert R.rank_weight(f16, [1, g, f16.pow(g, 2), f16.pow(g, 3)]) == 4


@given(st.lists(st.integers(0, 15), min_size=1, max_size=6))
def test_rank_weight_matches_oracle(v):
    ctx, F = field(2, 1, 4), OField(2, 1, 4)
    assert R.rank_weight(ctx, v) == rank_weight(F, v)


@given(st.lists(st.integers(0, 15), min_size=2, max_size=4), st.integers(1, 15))
def test_rank_weight_over_f4_subfield(v, lam):
    ctx, F = field(2, 2, 2), OField(2, 2, 2)
    assert R.rank_weight(ctx, v) == rank_weight(F, v)
    assert R.rank_weight(ctx, ctx.mul(lam, np.array(v))) == R.rank_weight(ctx, v)


@given(st.lists(st.integers(0, 7), min_size=1, max_size=5), st.integers(1, 7))
def test_support_matches_trace_oracle(v, lam):
    ctx, F = field(2, 1, 3), OField(2, 1, 3)
    S = R.rank_support(ctx, v)
    assert support_set(ctx, S) == support(F, v)
    assert S.dim == R.rank_weight(ctx, v)
    assert R.rank_support(ctx, ctx.mul(lam, np.array(v))) == S


def test_support_examples(f16):
    assert R.rank_support(f16, [0, 0, 0]).dim == 0
    assert R.rank_support(f16, [1, 1, 0, 1]).basis.tolist() == [[1, 1, 0, 1]]


def test_support_dimension_equals_weight_on_flagship(f16):
    C = K.code_C(f16)
    X = np.concatenate([x for _, x in C.codeword_batches()])
    w = R.rank_weights(f16, X)
    dims = R._kernels.rank(2, R._support_rows(f16, X))
    assert np.array_equal(w, dims)


# -- distance, MRD, duality -------------------------------------------------------


def test_min_distance_examples(f16):
    assert R.min_distance(K.gabidulin(f16, 4, 2)) == 3
    assert R.min_distance(RankCode(f16, np.eye(4, dtype=np.int64))) == 1
    assert R.min_distance(K.code_C(f16)) == 3
    assert R.min_distance(K.gabidulin(field(2, 1, 3), 3, 1)) == 3


def test_mrd_predicate(f16, rng):
    assert R.is_MRD(K.code_C(f16))
    assert R.is_MRD(RankCode(f16, np.eye(4, dtype=np.int64)))
    G = np.array([[1, 1, 0, 1], rng.integers(0, 16, 4)])
    G[1, 0] = f16.g
    assert not R.is_MRD(RankCode(f16, G))


def test_dual_code_properties(f16):
    C = K.gabidulin(f16, 4, 2)
    D = R.dual_code(C)
    assert D.k == 2 and R.min_distance(D) == 3
    assert np.all(linalg.matmul(f16, C.G, D.G.T) == 0)
    assert R.dual_code(D) == C


def test_nondegeneracy(f16):
    g = f16.g
    assert not R.is_nondegenerate(RankCode(f16, [[1, g, 0]]))
    assert not R.is_nondegenerate(RankCode(f16, [[1, g, g], [0, 1, 1]]))
    assert R.is_nondegenerate(K.code_C(f16))


@pytest.mark.parametrize("m,k,n,seed", [(3, 1, 3, 1), (3, 2, 3, 2), (3, 2, 4, 3), (3, 2, 4, 4), (2, 2, 3, 5),
                                        (2, 2, 4, 6), (2, 1, 4, 7), (3, 1, 2, 8), (2, 2, 2, 9), (3, 2, 4, 10)])
def test_generalized_weights_against_subcode_oracle(m, k, n, seed):
    ctx, F = field(2, 1, m), OField(2, 1, m)
    C = random_code(ctx, k, n, seed)
    expected = gen_weights_subcodes(F, C.G.tolist())
    assert R.galois_profile(C) == expected
    assert (expected[-1] == n) == R.is_nondegenerate(C)
    if R.is_nondegenerate(C):
        assert R.generalized_weights_geometric(C) == expected
    else:
        with pytest.raises(DegenerateCodeError):
            R.generalized_weights_geometric(C)


@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(0, 3))
def test_galois_and_geometric_agree_on_random_codes(seed, k, extra):
    ctx = field(2, 1, 3)
    n = min(6, k + extra)
    C = random_code(ctx, k, n, seed)
    gal = R.galois_profile(C)
    assert R.generalized_weights_galois(C, 1) == gal[0] == R.min_distance(C)
    if R.is_nondegenerate(C):
        assert R.generalized_weights_geometric(C) == gal
    if k < n:
        R.check_wei_duality(gal, R.galois_profile(R.dual_code(C)), n)


def test_galois_single_row_code(f16):
    v = [1, f16.g, f16.g, 0, 1]
    C = RankCode(f16, [v])
    assert R.generalized_weights_galois(C, 1) == R.rank_weight(f16, v) == 2


def test_full_code_profile(f16):
    C = RankCode(f16, np.eye(3, dtype=np.int64))
    assert R.generalized_weights_geometric(C) == (1, 2, 3)


def test_wei_duality_detector():
    R.check_wei_duality((3, 5, 7, 8), (3, 5, 7, 8), 8)
    with pytest.raises(InvariantViolation):
        R.check_wei_duality((3, 5, 7, 8), (3, 4, 7, 8), 8)


def test_direct_sum_profile_formula():
    ctx = field(2, 1, 3)
    D = K.gabidulin(ctx, 3, 1)
    assert R.generalized_weights_geometric(K.direct_sum(D, D)) == (3, 6)


# -- minimality ---------------------------------------------------------------


@pytest.mark.parametrize("m,k,n,seed", [(3, 2, 3, 11), (3, 2, 4, 12), (3, 2, 5, 13), (2, 2, 4, 14),
                                        (2, 2, 3, 15), (3, 2, 6, 16), (2, 3, 4, 17), (3, 2, 4, 18)])
def test_minimality_matches_oracle(m, k, n, seed):
    ctx, F = field(2, 1, m), OField(2, 1, m)
    C = random_code(ctx, k, n, seed)
    v = R.is_minimal_direct(C)
    assert v.value == is_minimal(F, C.G.tolist())
    if not v.value:
        u, w = v.witness["u"], v.witness["v"]
        Su, Sw = R.rank_support(ctx, u), R.rank_support(ctx, w)
        assert Su <= Sw
        assert linalg.rank(ctx, [u, w]) == 2
    if R.is_nondegenerate(C) and k >= 2:
        assert R.is_minimal_via_d2(C).value == v.value


def test_minimality_examples(f16):
    C = K.code_C(f16)
    assert R.is_minimal_direct(C).value
    v = R.is_minimal_via_d2(C)
    assert v.value and v.details["d2"] == 5
    assert R.is_minimal_direct(RankCode(f16, [[1, f16.g, 0]])).value


def test_minimality_odd_characteristic():
    ctx, F = field(3, 1, 2), OField(3, 1, 2)
    for seed in range(4):
        C = random_code(ctx, 2, 3, 100 + seed)
        assert R.is_minimal_direct(C).value == is_minimal(F, C.G.tolist())


def test_minimality_large_support_path():
    # n*h = 14 exceeds the bitset limit, exercising the rank-based inclusion test
    ctx = field(2, 1, 3)
    C = random_code(ctx, 2, 6, 77)
    v = R.is_minimal_direct(C)
    F = OField(2, 1, 3)
    assert v.value == is_minimal(F, C.G.tolist())


# -- isometries -----------------------------------------------------------------


def test_apply_isometry(f16, rng):
    C = K.code_C(f16)
    assert R.apply_isometry(C, np.eye(8, dtype=np.int64)) == C
    P = np.eye(8, dtype=np.int64)[rng.permutation(8)]
    Cp = R.apply_isometry(C, P)
    assert R.generalized_weights_geometric(Cp) == (3, 5, 7, 8)
    while True:
        A = rng.integers(0, 2, (8, 8))
        if linalg.is_invertible(f16, A):
            break
    Ca = R.apply_isometry(C, A)
    assert R.is_MRD(Ca) and R.is_minimal_direct(Ca).value
    with pytest.raises(SingularMatrixError):
        R.apply_isometry(C, np.zeros((8, 8), dtype=np.int64))
