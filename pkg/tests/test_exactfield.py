from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grhopf.exactfield import (
    FieldError,
    FieldSpec,
    Matrix,
    Subspace,
    embed_field,
    get_field,
    kernel_basis,
    nullspace,
    rref,
    solve_raw,
)

from oracles import rank_fraction, rank_mod_p

SPECS = [FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5), FieldSpec.gf(2, 2), FieldSpec.gf(3, 2), FieldSpec.gf(2, 3)]


def test_field_names():
    assert str(FieldSpec.gf(2)) == "GF(2)"
    assert str(FieldSpec.gf(2, 2)) == "GF(2,2)"
    assert str(FieldSpec.rationals()) == "QQ"


def test_orders():
    for spec in SPECS:
        F = get_field(spec)
        assert len(list(F.elements())) == spec.characteristic**spec.extension_degree


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_field_axioms_exhaustive(spec):
    F = get_field(spec)
    els = list(F.elements())
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, 1) == a
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
    # distributivity on a sample of triples
    for a in els[:5]:
        for b in els:
            for c in els[:5]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(spec):
    F = get_field(spec)
    q = F.q
    for a in F.elements():
        if a != 0:
            assert F.pow(a, q - 1) == 1
    orders = set()
    for a in F.elements():
        if a == 0:
            continue
        k, x = 1, a
        while x != 1:
            x = F.mul(x, a)
            k += 1
        orders.add(k)
    assert q - 1 in orders


def test_gf4_has_primitive_cube_root_of_unity():
    F = get_field(FieldSpec.gf(2, 2))
    roots = [a for a in F.elements() if F.pow(a, 3) == 1]
    assert len(roots) == 3


def test_frobenius_and_inverse():
    F = get_field(FieldSpec.gf(2, 3))
    for a in F.elements():
        assert F.frobenius_inverse(F.frobenius(a), 1) == a
        assert F.pow(a, 8) == a
        assert F.in_prime_field(a) == (F.frobenius(a) == a)


def test_rationals_are_exact():
    F = get_field(FieldSpec.rationals())
    x = F.inv(Fraction(3))
    assert isinstance(x, Fraction) and x == Fraction(1, 3)
    assert F.div(Fraction(2), Fraction(6)) == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_embedding():
    emb = embed_field(FieldSpec.gf(2), FieldSpec.gf(2, 2))
    F4 = get_field(FieldSpec.gf(2, 2))
    assert emb(1) == F4.one and emb(0) == F4.zero
    e42 = embed_field(FieldSpec.gf(2, 2), FieldSpec.gf(2, 4))
    F16 = get_field(FieldSpec.gf(2, 4))
    for a in F4.elements():
        for b in F4.elements():
            assert e42(F4.mul(a, b)) == F16.mul(e42(a), e42(b))
            assert e42(F4.add(a, b)) == F16.add(e42(a), e42(b))
    with pytest.raises(FieldError):
        embed_field(FieldSpec.gf(2, 2), FieldSpec.gf(2, 3))
    with pytest.raises(FieldError):
        embed_field(FieldSpec.rationals(), FieldSpec.gf(2))


def test_invalid_field():
    with pytest.raises(FieldError):
        FieldSpec.gf(4)


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n), min_size=1, max_size=5)
)


@settings(max_examples=60, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_rref_rank_matches_oracle_mod_p(rows, p):
    F = get_field(FieldSpec.gf(p))
    rows = [[x % p for x in r] for r in rows]
    red, piv = rref(F, rows, len(rows[0]))
    assert len(piv) == rank_mod_p(rows, p)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_rank_matches_oracle_rationals(rows):
    F = get_field(FieldSpec.rationals())
    fr = [[Fraction(x - 3, 2) for x in r] for r in rows]
    red, piv = rref(F, fr, len(fr[0]))
    assert len(piv) == rank_fraction(fr)


@settings(max_examples=60, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_nullspace_vectors_are_killed(rows, p):
    F = get_field(FieldSpec.gf(p))
    rows = [[x % p for x in r] for r in rows]
    n = len(rows[0])
    ns = nullspace(F, rows, n)
    assert len(ns) == n - rank_mod_p(rows, p)
    for v in ns:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) % p == 0


def test_solve_raw():
    F = get_field(FieldSpec.rationals())
    a = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    x, rank = solve_raw(F, a, [[Fraction(5)], [Fraction(6)]], 2)
    assert rank == 2
    assert x == [[Fraction(-4)], [Fraction(9, 2)]]
    x, _ = solve_raw(F, [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [[Fraction(1)], [Fraction(3)]], 2)
    assert x is None


def test_matrix_helpers():
    spec = FieldSpec.gf(3)
    m = Matrix(spec, ((1, 2), (2, 1)))
    assert m.rank() == 1
    ker = kernel_basis(m)
    assert len(ker) == 1
    assert (m @ ker[0]).rows == ((0,), (0,))
    assert Matrix.identity(spec, 3).rank() == 3


def test_subspace_reduce_and_coords():
    F = get_field(FieldSpec.gf(5))
    s = Subspace(F, 3, [(1, 2, 0), (0, 1, 1)])
    assert s.dim == 2
    v = (2, 1, 4 % 5)
    # 2*(1,2,0) + (-3)*(0,1,1) = (2, 1, -3) = (2, 1, 2) mod 5
    assert s.contains((2, 1, 2))
    c = s.coords((2, 1, 2))
    rebuilt = [sum(F.mul(ci, bi[k]) for ci, bi in zip(c, s.basis)) % 5 for k in range(3)]
    assert tuple(rebuilt) == (2, 1, 2)
    assert not s.contains(v)
    assert len(s.complement_indices()) == 1
