"""Components of finite gr-group schemes: π₀, the identity component, étale/connected splittings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .checks import Report, VerificationError
from .exactfield import FieldSpec, Subspace, nullspace, solve_raw
from .gralg.algebra import (
    GradedAlgebra,
    SubalgebraData,
    Vector,
    degree_zero_part,
    field_algebra,
    ideal_span,
    subalgebra,
)
from .gralg.decompose import Decomposition, decompose_local, is_separable, nilradical_degree0
from .gralg.morphism import Morphism
from .hopf import (
    HopfAlgebra,
    PreconditionError,
    graded_dual,
    is_cocommutative,
    quotient_hopf,
    sub_hopf,
    verify_hopf,
)


def decompose_hopf(h: HopfAlgebra) -> Decomposition:
    return decompose_local(h.algebra, h.counit_values())


def trivial_hopf(spec: FieldSpec) -> HopfAlgebra:
    """The base field with its unique Hopf structure."""
    from .gralg.algebra import tensor_product

    k = field_algebra(spec)
    sq = tensor_product(k, k)
    return HopfAlgebra(
        k,
        sq,
        Morphism(k, sq, (sq.unit,), True),
        Morphism(k, field_algebra(spec), ((1,),), True),
        Morphism(k, k, ((1,),), True),
        "k",
    )


# -- π₀ -------------------------------------------------------------------------


def _inverse_in_corner(a: GradedAlgebra, y: Vector, e: Vector) -> Vector:
    """``x`` with ``x y = e`` inside the corner ``a e``."""
    F = a.field
    cols = [a.mul(a.basis_vector(j), y) for j in range(a.dim)]
    rows = [[cols[j][r] for j in range(a.dim)] for r in range(a.dim)]
    x, _ = solve_raw(F, rows, [[c] for c in e], a.dim)
    if x is None:
        raise VerificationError("element is not invertible in its component")
    return a.mul(tuple(r[0] for r in x), e)


def _squarefree_root(a: GradedAlgebra, e: Vector, z: Vector, degree: int) -> Vector | None:
    """Hensel-Newton lift of ``z`` to a root of the squarefree part of its minimal polynomial."""
    import sympy

    F = a.field
    powers = [e]
    while True:
        cur = a.mul(powers[-1], z)
        if Subspace(F, a.dim, powers).contains(cur):
            k = len(powers)
            rows = [[powers[i][r] for i in range(k)] + [cur[r]] for r in range(a.dim)]
            v = nullspace(F, rows, k + 1)[0]
            mp = [F.div(c, v[-1]) for c in v]
            break
        powers.append(cur)
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(int(Fraction(c).numerator), int(Fraction(c).denominator)) for c in reversed(mp)], t)
    g = poly.sqf_part()
    if g.degree() != degree:
        return None
    gc = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
    dg = [Fraction(k) * c for k, c in enumerate(gc)][1:]

    def ev(coeffs, x):
        acc = a.zero()
        for c in reversed(coeffs):
            acc = a.add(a.mul(acc, x), a.scale(c, e))
        return acc

    x = z
    for _ in range(a.dim.bit_length() + 2):
        gx = ev(gc, x)
        if not any(gx):
            return x
        x = a.sub(x, a.mul(gx, _inverse_in_corner(a, ev(dg, x), e)))
    return x if not any(ev(gc, x)) else None


@dataclass
class Pi0Result:
    hopf: HopfAlgebra
    inclusion: Morphism
    report: Report
    sub: SubalgebraData


def pi0(h: HopfAlgebra, dec: Decomposition | None = None) -> Pi0Result:
    """The largest separable sub-Hopf-algebra, inside the degree-0 part.

    In characteristic p it is the image of ``x -> x^(p^m)`` on ``A₀`` with
    ``p^m`` beyond every nilpotency index and ``m`` a multiple of every
    residue degree (so the map fixes the image pointwise). Over QQ each
    residue field is embedded by Newton-lifting a generator's squarefree
    minimal polynomial inside its component.
    """
    a = h.algebra
    F = a.field
    dec = dec or decompose_hopf(h)
    zero = degree_zero_part(a)
    a0 = zero.algebra
    report = Report()
    if F.p > 0:
        step = F.n * lcm(*(c.residue.degree for c in dec.components))
        m = step
        while F.p**m < a0.dim:
            m += step
        q = F.p**m
        vecs = [zero.embed(a0.power(a0.basis_vector(i), q)) for i in range(a0.dim)]
        sub = subalgebra(a, vecs, name=f"pi0({a.name})")
        fixed = all(a.power(v, q) == v for v in sub.space.basis)
        report.add("frobenius-fixes-image", fixed)
    else:
        vecs = []
        for comp in dec.components:
            e = comp.idempotent
            d = comp.residue.degree
            vecs.append(e)
            if d == 1:
                continue
            root = None
            for j in a.indices_of_degree(0):
                z = a.mul(a.basis_vector(j), e)
                root = _squarefree_root(a, e, z, d)
                if root is not None:
                    break
            if root is None:
                raise VerificationError("could not embed a residue field into its component")
            p = e
            for _ in range(d - 1):
                p = a.mul(p, root)
                vecs.append(p)
        sub = subalgebra(a, vecs, name=f"pi0({a.name})")
    expected = sum(c.residue.degree for c in dec.components)
    report.add("dimension-matches-residue-fields", sub.algebra.dim == expected,
               f"{sub.algebra.dim} != {expected}")
    report.add("degree-zero", all(d == 0 for d in sub.algebra.degrees))
    report.add("separable", is_separable(sub.algebra))
    ph, incl, sub_report = sub_hopf(h, sub, name=f"pi0({a.name})")
    report.extend(sub_report.checks)
    if not report.passed:
        raise VerificationError("π₀ embedding failed verification", report)
    return Pi0Result(ph, incl, report, sub)


# -- the identity component -----------------------------------------------------------


@dataclass
class Component0Result:
    hopf: HopfAlgebra
    projection: Morphism
    idempotent: Vector
    report: Report


def component0(h: HopfAlgebra, dec: Decomposition | None = None) -> Component0Result:
    """``A⁰ = A e₀`` for the idempotent with ``ε(e₀) = 1``, as a Hopf quotient of A."""
    a = h.algebra
    dec = dec or decompose_hopf(h)
    if dec.counit_component is None:
        raise VerificationError("no component on which the counit is 1")
    comp = dec.components[dec.counit_component]
    e0 = comp.idempotent
    ideal = ideal_span(a, [a.sub(a.unit, e0)])
    q, proj, report = quotient_hopf(h, ideal, name=f"{a.name}^0")
    report.add("residue-field-is-base", comp.residue.degree == 1)
    if not report.passed:
        raise VerificationError("identity component is not a Hopf quotient", report)
    return Component0Result(q, proj, e0, report)


# -- classification ----------------------------------------------------------------


@dataclass
class ComponentReport:
    pi0: Pi0Result
    component0: Component0Result
    decomposition: Decomposition
    algebraically_connected: bool
    connected: bool
    etale: bool
    gr_local: bool
    spectrum_connected: bool
    report: Report

    def flags(self) -> dict[str, bool]:
        return {
            "algebraically_connected": self.algebraically_connected,
            "connected": self.connected,
            "etale": self.etale,
            "gr_local": self.gr_local,
            "spectrum_connected": self.spectrum_connected,
        }


def classify_components(h: HopfAlgebra) -> ComponentReport:
    a = h.algebra
    dec = decompose_hopf(h)
    p0 = pi0(h, dec)
    c0 = component0(h, dec)
    alg_conn = len(a.indices_of_degree(0)) == 1
    connected = p0.hopf.dim == 1
    etale = is_separable(a)
    local = dec.is_gr_local
    spec_conn = dec.spectrum_connected
    report = Report()
    report.add("connected-iff-no-idempotents", connected == spec_conn)
    report.add("algebraically-connected-implies-connected", (not alg_conn) or connected)
    report.add("gr-local-implies-spectrum-connected", (not local) or spec_conn)
    report.add("etale-implies-pi0-everything", (not etale) or p0.hopf.dim == a.dim)
    report.add("etale-implies-degree-zero", (not etale) or all(d == 0 for d in a.degrees))
    if not report.passed:
        raise VerificationError("component flags are inconsistent", report)
    return ComponentReport(p0, c0, dec, alg_conn, connected, etale, local, spec_conn, report)


def nilradical(a: GradedAlgebra) -> Subspace:
    """Nilradical of a positively graded algebra: ``N₀ ⊕ A_{>0}``."""
    zero = degree_zero_part(a)
    n0 = nilradical_degree0(zero.algebra)
    vecs = [zero.embed(v) for v in n0.basis]
    vecs += [a.basis_vector(i) for i in range(a.dim) if a.degrees[i] > 0]
    return Subspace(a.field, a.dim, vecs)


@dataclass
class SemidirectReport:
    report: Report
    dim_algebra: int
    dim_component0: int
    dim_pi0: int


def semidirect_check(h: HopfAlgebra) -> SemidirectReport:
    """Split exactness ``A⁰ ← A ← π₀A`` with ``π₀A → A → A/N`` bijective."""
    a = h.algebra
    dec = decompose_hopf(h)
    report = Report()
    p0 = pi0(h, dec)
    report.add("pi0-sub-hopf", p0.report.passed)
    c0 = component0(h, dec)
    report.add("component0-hopf-quotient", c0.report.passed)
    nil = nilradical(a)
    images = [nil.reduce(v) for v in p0.sub.space.basis]
    rank = Subspace(a.field, a.dim, images).dim
    report.add("pi0-to-reduced-is-identity", rank == p0.hopf.dim and a.dim - nil.dim == p0.hopf.dim,
               f"rank {rank}, dim A/N {a.dim - nil.dim}, dim pi0 {p0.hopf.dim}")
    report.add("dimension-product", a.dim == c0.hopf.dim * p0.hopf.dim,
               f"{a.dim} != {c0.hopf.dim} * {p0.hopf.dim}")
    return SemidirectReport(report, a.dim, c0.hopf.dim, p0.hopf.dim)


# -- four-factor splitting -----------------------------------------------------------


FACTOR_TAGS = (
    ("etale", "etale"),
    ("etale", "connected"),
    ("connected", "etale"),
    ("connected", "connected"),
)


@dataclass
class Factor:
    tag: tuple[str, str]
    hopf: HopfAlgebra
    flags: dict[str, bool]
    dual_flags: dict[str, bool]

    @property
    def dim(self) -> int:
        return self.hopf.dim

    @property
    def tag_verified(self) -> bool:
        own, dual = self.tag
        if self.dim == 1:
            return True
        ok_own = self.flags["etale"] if own == "etale" else self.flags["connected"]
        ok_dual = self.dual_flags["etale"] if dual == "etale" else self.dual_flags["connected"]
        return ok_own and ok_dual


@dataclass
class FourFactorReport:
    factors: list[Factor]
    dim: int
    report: Report

    def factor(self, own: str, dual: str) -> Factor:
        return next(f for f in self.factors if f.tag == (own, dual))

    @property
    def dimension_product(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.dim
        return out


def _connected_part(h: HopfAlgebra) -> HopfAlgebra:
    if h.dim == 1:
        return h
    return component0(h).hopf


def _etale_part(h: HopfAlgebra) -> HopfAlgebra:
    if h.dim == 1:
        return h
    return pi0(h).hopf


def _flags(h: HopfAlgebra) -> dict[str, bool]:
    if h.dim == 1:
        return {"etale": True, "connected": True}
    cr = classify_components(h)
    return {"etale": cr.etale, "connected": cr.connected}


def four_factor(h: HopfAlgebra) -> FourFactorReport:
    """Split a commutative and cocommutative finite Hopf algebra into four factors.

    ``A⁰`` and ``π₀A`` are each split again through their duals: for ``X``
    one of them, ``(π₀(X*))*`` and ``((X*)⁰)*`` are the parts whose duals
    are étale resp. connected.
    """
    if not is_cocommutative(h):
        raise PreconditionError("four-factor splitting needs a cocommutative Hopf algebra")
    if h.truncation is not None:
        raise PreconditionError("four-factor splitting needs a finite Hopf algebra, not a truncation")
    if h.antipode is None:
        from .hopf import synthesize_antipode

        h = synthesize_antipode(h)
    parts = {"connected": _connected_part(h), "etale": _etale_part(h)}
    factors = []
    report = Report()
    for own, dual in FACTOR_TAGS:
        x = parts[own]
        xd = graded_dual(x)
        inner = _etale_part(xd) if dual == "etale" else _connected_part(xd)
        fac = graded_dual(inner) if inner.dim > 1 else trivial_hopf(h.spec)
        fd = graded_dual(fac) if fac.dim > 1 else fac
        f = Factor((own, dual), fac, _flags(fac), _flags(fd))
        report.add(f"factor-{own}-{dual}-verified", verify_hopf(fac).passed)
        report.add(f"factor-{own}-{dual}-tag", f.tag_verified)
        factors.append(f)
    out = FourFactorReport(factors, h.dim, report)
    report.add("dimension-product", out.dimension_product == h.dim, f"{out.dimension_product} != {h.dim}")
    return out


__all__ = [
    "ComponentReport",
    "Component0Result",
    "FACTOR_TAGS",
    "Factor",
    "FourFactorReport",
    "Pi0Result",
    "SemidirectReport",
    "classify_components",
    "component0",
    "decompose_hopf",
    "four_factor",
    "nilradical",
    "pi0",
    "semidirect_check",
    "trivial_hopf",
]
