import numpy as np
import pytest
from hypothesis import given, strategies as st

from rankmetric import FieldError, FieldParams, field, make_field

from oracles import OField

SMALL = [(2, 1, 1), (2, 1, 3), (2, 1, 4), (2, 2, 2), (3, 1, 2), (3, 1, 3), (5, 1, 2), (2, 2, 3)]


@pytest.mark.parametrize("p,h,m", SMALL)
def test_multiplication_table_matches_polynomial_oracle(p, h, m):
    ctx, F = field(p, h, m), OField(p, h, m)
    assert list(ctx.modulus) == F.mod
    a = np.arange(ctx.order)
    table = np.asarray(ctx.mul(a[:, None], a[None, :]))
    for x in range(ctx.order):
        for y in range(ctx.order):
            assert table[x, y] == F.mul(x, y)
            assert ctx.add(x, y) == F.add(x, y)


@pytest.mark.parametrize("p,h,m", SMALL)
def test_subfield_and_trace_match_oracle(p, h, m):
    ctx, F = field(p, h, m), OField(p, h, m)
    assert sorted(ctx.subfield.tolist()) == F.subfield()
    assert len(ctx.subfield) == ctx.q
    for a in range(ctx.order):
        assert ctx.frobenius(a, 1) == F.frob(a)
        assert ctx.trace(a) == F.trace(a)


def test_f16_modulus_and_generator(f16):
    assert f16.modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
    g = f16.g
    assert f16.mul(g, f16.inv(g)) == 1
    assert f16.pow(g, 4) == f16.add(g, 1)
    assert f16.trace(1) == 0
    assert f16.trace(g) == 0
    assert f16.trace(f16.pow(g, 3)) == 1


def test_f256_has_f4_inside(f256):
    fixed = [a for a in range(256) if f256.pow(a, 4) == a]
    assert len(fixed) == 4
    assert sorted(fixed) == sorted(f256.subfield.tolist())


def test_degenerate_tower():
    ctx = field(2, 1, 1)
    assert ctx.order == 2
    assert sorted(ctx.subfield.tolist()) == [0, 1]
    assert ctx.trace(1) == 1


def test_char2_doubling_vanishes(f16):
    a = np.arange(16)
    assert np.all(f16.add(a, a) == 0)


def test_frobenius_basics(f16, rng):
    g = f16.g
    assert f16.frobenius(g, 0) == g
    assert f16.frobenius(g, 1) == f16.mul(g, g)
    a = rng.integers(0, 16, 1000)
    assert np.array_equal(f16.frobenius(a, f16.m), a)


@pytest.mark.parametrize("p,h,m", SMALL)
def test_trace_is_onto_subfield_and_linear(p, h, m):
    ctx = field(p, h, m)
    t = np.asarray(ctx.trace(np.arange(ctx.order)))
    assert set(t.tolist()) == set(ctx.subfield.tolist())
    # every fibre of an onto F_q-linear map has the same size
    _, counts = np.unique(t, return_counts=True)
    assert len(set(counts.tolist())) == 1


@pytest.mark.parametrize("p,h,m", SMALL)
def test_expand_contract_roundtrip(p, h, m):
    ctx = field(p, h, m)
    a = np.arange(ctx.order)
    E = ctx.expand(a)
    assert E.shape == (ctx.order, m)
    assert np.all(ctx.is_in_subfield(E))
    assert np.array_equal(ctx.contract(E), a)
    # every vector of F_q^m is hit exactly once
    assert len({tuple(r) for r in E.tolist()}) == ctx.order


def test_expand_examples(f16):
    assert f16.expand(0).tolist() == [0, 0, 0, 0]
    assert f16.expand(f16.g).tolist() == [0, 1, 0, 0]


def test_contract_rejects_non_subfield(f16):
    with pytest.raises(FieldError):
        f16.contract([f16.g, 0, 0, 0])
    with pytest.raises(FieldError):
        f16.contract([1, 0, 0])


@given(st.integers(0, 255), st.integers(0, 255), st.sampled_from([1, 2, 3]))
def test_field_axioms_f256(a, b, i):
    ctx = field(2, 2, 4)
    c = (a * 31 + b) % 256
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.frobenius(ctx.add(a, b), i) == ctx.add(ctx.frobenius(a, i), ctx.frobenius(b, i))
    assert np.array_equal(ctx.expand(ctx.add(a, b)), ctx.add(ctx.expand(a), ctx.expand(b)))
    assert ctx.is_in_subfield(ctx.trace(a))


@given(st.integers(0, 26), st.integers(0, 26))
def test_odd_characteristic_identities(a, b):
    ctx = field(3, 1, 3)
    assert ctx.add(a, ctx.neg(a)) == 0
    assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))
    assert ctx.pow(ctx.add(a, b), 3) == ctx.add(ctx.pow(a, 3), ctx.pow(b, 3))
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.div(ctx.mul(a, b), a) == b


def test_field_sum_over_axes_odd_p(f27, rng):
    A = rng.integers(0, 27, (3, 4, 5))
    for axis in (0, 1, 2, -1, -2):
        got = f27.sum(A, axis=axis)
        moved = np.moveaxis(A, axis, 0)
        acc = moved[0]
        for x in moved[1:]:
            acc = f27.add(acc, x)
        assert np.array_equal(got, acc)


def test_inverse_of_zero_raises(f16):
    with pytest.raises(ZeroDivisionError):
        f16.inv(0)


@pytest.mark.parametrize("p,h,m", [(2, 1, 4), (2, 2, 4), (3, 1, 3), (2, 1, 1), (2, 3, 4)])
def test_normal_and_dual_bases(p, h, m):
    ctx = field(p, h, m)
    al = ctx.normal_basis()
    assert ctx.fq_rank(al) == m
    assert np.array_equal(al, [ctx.frobenius(al[0], i) for i in range(m)])
    ga = ctx.dual_basis(al)
    gram = np.asarray(ctx.trace(ctx.mul(al[:, None], ga[None, :])))
    assert np.array_equal(gram, np.eye(m, dtype=np.int64))
    assert np.array_equal(ctx.dual_basis(ga), al)


def test_dual_basis_of_dependent_tuple_fails(f16):
    with pytest.raises(FieldError):
        f16.dual_basis([1, 1, f16.g, f16.pow(f16.g, 2)])


def test_is_in_subfield(f16):
    assert f16.is_in_subfield(1)
    assert f16.is_in_subfield(0)
    assert not f16.is_in_subfield(f16.g)


def test_element_text_encoding(f256):
    for a in range(256):
        assert f256.decode(f256.encode(a)) == a
    assert f256.encode(0) == "0"
    assert f256.encode(1) == "g^0"
    with pytest.raises(FieldError):
        f256.decode("x^3")


def test_bad_parameters():
    with pytest.raises(FieldError):
        field(4, 1, 2)
    with pytest.raises(FieldError):
        make_field(FieldParams(2, 1, 30))


def test_field_objects_are_cached():
    assert field(2, 1, 4) is field(2, 1, 4)
