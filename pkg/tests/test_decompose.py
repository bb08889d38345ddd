from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings

from grhopf.cli.parser import parse_presentation
from grhopf.exactfield import FieldSpec
from grhopf.gralg.algebra import build_algebra
from grhopf.gralg.decompose import decompose_local, is_separable, lift_idempotent, nilradical_degree0

from conftest import load
from oracles import idempotents_exhaustive
from strategies import FINITE_FIELDS, algebra_presentations


def algebra(text):
    return build_algebra(parse_presentation(text))


def test_mu3_over_rationals():
    h = load("mu3_q")
    a = h.algebra
    dec = decompose_local(a, h.counit_values())
    third = Fraction(1, 3)
    # coordinates in the basis 1, x, x^2
    assert dec.idempotents == [(third, third, third), (2 * third, -third, -third)]
    assert [c.dim for c in dec.components] == [1, 2]
    assert dec.counit_component == 0
    assert [str(r) for r in dec.residue_fields] == ["QQ", "QQ[t]/(t^2 + t + 1)"]
    assert a.format(dec.idempotents[1], factor=True) == "-1/3*(x^2 + x - 2)"
    assert len(dec.all_idempotents()) == 4


def test_mu3_over_gf2():
    a = load("mu3_f2").algebra
    dec = decompose_local(a)
    assert sorted(dec.all_idempotents()) == sorted([(0, 0, 0), (1, 0, 0), (1, 1, 1), (0, 1, 1)])
    assert [str(r) for r in dec.residue_fields] == ["GF(2)", "GF(2,2)"]
    assert is_separable(a)


def test_family_matches_exhaustive_search():
    for name in ("mu3_f2", "c_ex53", "d_variety", "a1"):
        a = load(name).algebra
        assert sorted(decompose_local(a).all_idempotents()) == sorted(idempotents_exhaustive(a)), name


def test_a1_is_local():
    dec = decompose_local(load("a1").algebra)
    assert dec.is_gr_local and dec.spectrum_connected
    assert dec.components[0].maximal_ideal.dim == 7


def test_nilpotent_degree0_is_not_separable():
    a = load("d_variety").algebra
    assert not is_separable(a)
    z = algebra("algebra A over GF(2)\ngen u deg 0\nrel u^2 = 0\n")
    # the trace form vanishes identically here, yet only u is nilpotent
    assert nilradical_degree0(z).dim == 1


def test_nilradical_over_rationals():
    z = algebra("algebra A over QQ\ngen u deg 0\nrel u^3 = 0\n")
    assert nilradical_degree0(z).dim == 2


def test_idempotent_lifting():
    a = algebra("algebra A over GF(2)\ngen x deg 0\nrel x^4 = x^2\n")
    # x^4 + x^2 = x^2 (x + 1)^2, and x is idempotent only modulo the nilpotent x (x + 1)
    x = a.generator_vectors()[0]
    assert a.mul(x, x) != x
    e = lift_idempotent(a, x)
    assert a.mul(e, e) == e
    assert e == a.power(x, 2)  # 3x^2 - 2x^3 = x^2 in characteristic 2


def test_extension_residue_field_over_gf4():
    a = algebra("algebra A over GF(2,2)\ngen x deg 0\nrel x^5 = 1\n")
    dec = decompose_local(a)
    # x^5 - 1 = (x - 1)(x^4 + x^3 + x^2 + x + 1); the quartic splits into two quadratics over GF(4)
    assert sorted(r.degree for r in dec.residue_fields) == [1, 2, 2]


@settings(max_examples=60, deadline=None)
@given(algebra_presentations(fields=FINITE_FIELDS, max_dim=12))
def test_idempotents_match_exhaustive_search_on_random_algebras(p):
    a = build_algebra(p)
    if a.field.q ** a.dim > 5000:
        return
    dec = decompose_local(a)
    assert sorted(dec.all_idempotents()) == sorted(idempotents_exhaustive(a))
    assert sum(c.dim for c in dec.components) == a.dim


@settings(max_examples=60, deadline=None)
@given(algebra_presentations())
def test_components_are_local_with_residue_degrees(p):
    a = build_algebra(p)
    dec = decompose_local(a)
    assert sum(c.dim for c in dec.components) == a.dim
    for c in dec.components:
        assert a.mul(c.idempotent, c.idempotent) == c.idempotent
        assert all(a.degrees[i] == 0 for i, v in enumerate(c.idempotent) if v != 0)
        assert c.dim - c.maximal_ideal.dim == c.residue.degree
    assert dec.spectrum_connected == (len(dec.components) == 1)


def test_field_spec_of_residue():
    dec = decompose_local(load("mu3_f2").algebra)
    assert dec.residue_fields[1].spec == FieldSpec.gf(2, 2)
