from __future__ import annotations

import pytest

from grhopf.gralg.decompose import decompose_local, is_separable
from grhopf.hopf import PreconditionError, graded_dual, synthesize_antipode, verify_hopf
from grhopf.scheme import (
    classify_components,
    component0,
    four_factor,
    nilradical,
    pi0,
    semidirect_check,
    trivial_hopf,
)

from conftest import FIXTURE_NAMES, load

FINITE = [n for n in FIXTURE_NAMES if n != "ex2_7"] + ["gf3_exterior", "twisted_gf3"]


def full(name):
    h = load(name)
    return h if h.antipode is not None else synthesize_antipode(h)


@pytest.mark.parametrize(
    "name, pi0_dim, comp0_dim",
    [
        ("a1", 1, 8),
        ("mu3_f2", 3, 1),
        ("mu3_q", 3, 1),
        ("c_ex53", 3, 2),
        ("d_variety", 1, 4),
        ("ex2_8", 1, 4),
        ("ex2_7", 1, 5),
        ("gf3_exterior", 1, 6),
        ("twisted_gf3", 2, 2),
    ],
)
def test_pi0_and_identity_component_dimensions(name, pi0_dim, comp0_dim):
    h = full(name)
    p = pi0(h)
    c = component0(h)
    assert p.hopf.dim == pi0_dim
    assert c.hopf.dim == comp0_dim
    assert p.report.passed and c.report.passed
    assert is_separable(p.hopf.algebra)
    assert verify_hopf(p.hopf).passed and verify_hopf(c.hopf).passed


def test_pi0_of_separable_algebra_is_everything():
    for name in ("mu3_f2", "mu3_q"):
        h = full(name)
        assert pi0(h).hopf.dim == h.dim
        assert component0(h).hopf.dim == 1


def test_identity_component_of_c_is_exterior():
    c = component0(full("c_ex53"))
    assert list(c.hopf.algebra.labels) == ["1", "y"]
    assert load("c_ex53").algebra.format(c.idempotent) == "x^2 + x + 1"


def test_pi0_basis_for_c():
    p = pi0(full("c_ex53"))
    assert list(p.hopf.algebra.labels) == ["1", "x", "x^2"]


@pytest.mark.parametrize("name", FINITE + ["ex2_7"])
def test_semidirect_splitting(name):
    sd = semidirect_check(full(name))
    assert sd.report.passed, str(sd.report)
    assert sd.dim_algebra == sd.dim_component0 * sd.dim_pi0


@pytest.mark.parametrize(
    "name, flags",
    [
        ("a1", dict(algebraically_connected=True, connected=True, etale=False, gr_local=True, spectrum_connected=True)),
        ("mu3_f2", dict(algebraically_connected=False, connected=False, etale=True, gr_local=False, spectrum_connected=False)),
        ("c_ex53", dict(algebraically_connected=False, connected=False, etale=False, gr_local=False, spectrum_connected=False)),
        ("d_variety", dict(algebraically_connected=False, connected=True, etale=False, gr_local=True, spectrum_connected=True)),
    ],
)
def test_component_flags(name, flags):
    cr = classify_components(full(name))
    assert cr.flags() == flags
    assert cr.report.passed


def test_nilradical_of_c():
    a = load("c_ex53").algebra
    n = nilradical(a)
    # mu_3 over GF(2) is reduced in degree 0, so the nilradical is A_{>0}
    assert n.dim == 3


def test_four_factor_on_c():
    ff = four_factor(full("c_ex53"))
    dims = {f.tag: f.dim for f in ff.factors}
    assert dims == {
        ("etale", "etale"): 3,
        ("etale", "connected"): 1,
        ("connected", "etale"): 1,
        ("connected", "connected"): 2,
    }
    assert ff.dimension_product == 6
    assert ff.report.passed
    assert all(f.tag_verified for f in ff.factors)


def test_four_factor_on_mu3_and_d():
    ff = four_factor(full("mu3_f2"))
    assert ff.factor("etale", "etale").dim == 3
    ff = four_factor(full("d_variety"))
    assert ff.factor("connected", "connected").dim == 4


def test_four_factor_etale_factor_dual():
    ff = four_factor(full("c_ex53"))
    factor = ff.factor("etale", "etale").hopf
    residues = sorted(str(r) for r in decompose_local(factor.algebra).residue_fields)
    assert residues == ["GF(2)", "GF(2,2)"]
    # x is grouplike, so the dual basis of 1, x, x^2 is a family of orthogonal idempotents
    dual = graded_dual(factor)
    assert [str(r) for r in decompose_local(dual.algebra).residue_fields] == ["GF(2)"] * 3


def test_four_factor_preconditions():
    with pytest.raises(PreconditionError):
        four_factor(full("a1"))
    with pytest.raises(PreconditionError):
        four_factor(full("ex2_7"))


def test_trivial_hopf():
    from grhopf.exactfield import FieldSpec

    k = trivial_hopf(FieldSpec.gf(5))
    assert k.dim == 1 and verify_hopf(k).passed
