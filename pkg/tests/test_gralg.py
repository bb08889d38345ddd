from __future__ import annotations

from fractions import Fraction

import pytest

from grhopf.cli.parser import parse_presentation
from grhopf.exactfield import FieldError, FieldSpec, Subspace
from grhopf.gralg.algebra import (
    AlgebraError,
    build_algebra,
    degree_zero_part,
    field_algebra,
    hilbert_series,
    ideal_span,
    kron,
    multiply_series,
    quotient_algebra,
    subalgebra,
    tensor_product,
)
from grhopf.gralg.morphism import MorphismError, identity_map, make_morphism

from conftest import load, ring
from oracles import mul as oracle_mul


def algebra(text):
    return build_algebra(parse_presentation(text))


def test_a1_dimension_and_hilbert_series():
    a = load("a1").algebra
    assert a.dim == 8
    assert hilbert_series(a) == [1, 1, 1, 2, 1, 1, 1]
    assert a.is_associative() and a.is_graded_commutative()


def test_basis_order_first_generator_slowest():
    a = algebra("algebra A over GF(2)\ngen x deg 1\ngen y deg 2\nrel x^2 = 0\nrel y^2 = 0\n")
    assert list(a.labels) == ["1", "y", "x", "x*y"]


def test_odd_generators_square_to_zero_away_from_char_2():
    a = algebra("algebra A over GF(3)\ngen x deg 1\ngen y deg 1\n")
    assert a.dim == 4
    x, y = a.generator_vectors()
    assert not any(a.mul(x, x))
    assert a.mul(x, y) == a.neg(a.mul(y, x))


def test_char_2_odd_generator_needs_no_square_zero():
    a = algebra("algebra A over GF(2)\ngen x deg 1\nrel x^4 = 0\n")
    x = a.generator_vectors()[0]
    assert any(a.mul(x, x))


def test_koszul_sign_in_tensor_square_gf3():
    a = algebra("algebra A over GF(3)\ngen x deg 1\ngen y deg 1\n")
    t = tensor_product(a, a)
    x, y = a.generator_vectors()
    one = a.unit
    lhs = t.mul(kron(t, one, y), kron(t, x, one))
    # (1⊗y)(x⊗1) = (-1)^{|y||x|} x⊗y = 2·x⊗y over GF(3)
    assert lhs == t.scale(2, kron(t, x, y))
    assert t.is_graded_commutative() and t.is_associative()


def test_structure_constants_match_dense_oracle():
    a = load("c_ex53").algebra
    for i in range(a.dim):
        for j in range(a.dim):
            assert a.mul(a.basis_vector(i), a.basis_vector(j)) == oracle_mul(a, a.basis_vector(i), a.basis_vector(j))


def test_degree0_relation_with_lower_terms():
    a = algebra("algebra A over QQ\ngen x deg 0\nrel x^2 = 1/4\n")
    x = a.generator_vectors()[0]
    assert a.mul(x, x) == a.scale(Fraction(1, 4), a.unit)


def test_truncation_zeroes_high_products():
    a = load("ex2_7").algebra
    assert a.truncation == 8
    assert a.dim == 5
    t = a.generator_vectors()[0]
    assert not any(a.power(t, 5))
    assert hilbert_series(a) == [1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_truncated_tensor_square_drops_high_pairs():
    a = load("ex2_7").algebra
    t = tensor_product(a, a)
    assert t.truncation == 8
    assert all(d <= 8 for d in t.degrees)
    assert t.dim == 15  # pairs (i, j) with 2i + 2j <= 8


def test_multiply_series():
    assert multiply_series([1, 1], [1, 0, 1]) == [1, 1, 1, 1]
    assert multiply_series([1, 1], [1, 1], truncation=1) == [1, 2]


def test_tensor_field_mismatch():
    with pytest.raises(FieldError):
        tensor_product(field_algebra(FieldSpec.gf(2)), field_algebra(FieldSpec.gf(3)))


def test_degree_zero_part_and_subalgebra():
    a = load("c_ex53").algebra
    z = degree_zero_part(a)
    assert z.algebra.dim == 3
    assert all(d == 0 for d in z.algebra.degrees)
    with pytest.raises(AlgebraError):
        subalgebra(a, [a.generator_vectors()[1]])


def test_quotient_by_ideal_keeps_low_index_basis():
    a = load("c_ex53").algebra
    x, y = a.generator_vectors()
    ideal = ideal_span(a, [a.sub(x, a.unit)])
    q = quotient_algebra(a, ideal)
    assert q.algebra.dim == 2
    assert list(q.algebra.labels) == ["1", "y"]
    assert q.project(x) == q.project(a.unit)
    with pytest.raises(AlgebraError):
        quotient_algebra(a, Subspace(a.field, a.dim, [y]))


def test_make_morphism_checks_relations_and_degrees():
    a = load("a1").algebra
    r = ring("gf2_a4")
    aa = r.generator_vectors()[0]
    m = make_morphism(a, r, [aa, r.zero()])
    assert m.certified and m.is_algebra_map()
    with pytest.raises(MorphismError, match="homogeneous"):
        make_morphism(a, r, [r.unit, r.zero()])
    with pytest.raises(MorphismError):
        make_morphism(a, r, [aa])


def test_make_morphism_rejects_violated_relation():
    src = algebra("algebra A over GF(2)\ngen x deg 0\nrel x^2 = 0\n")
    tgt = algebra("algebra B over GF(2)\ngen u deg 0\nrel u^3 = 0\n")
    with pytest.raises(MorphismError, match="relation"):
        make_morphism(src, tgt, [tgt.unit])


def test_identity_and_composition():
    a = load("a1").algebra
    i = identity_map(a)
    assert i.compose(i).is_identity()


def test_element_wrapper():
    a = load("mu3_q").algebra
    x = a.element(a.generator_vectors()[0])
    assert x**3 == a.element(a.unit)
    assert str(x * x + x) in ("x^2 + x", "x + x^2")
