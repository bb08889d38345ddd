"""Points ``G(R) = Hom(k[G], R)`` over finite graded test rings, with the convolution group law."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .checks import Report, VerificationError
from .exactfield import FieldError, FieldSpec, Raw, embed_field
from .gralg.algebra import GradedAlgebra, Vector, build_algebra
from .gralg.morphism import Morphism, MorphismError, make_morphism
from .hopf import (
    HopfAlgebra,
    PreconditionError,
    convolution,
    ensure_antipode,
    hopf_from_presentation,
    unit_counit,
)

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The number of candidate generator assignments is above the budget."""

    def __init__(self, candidates: int, budget: int):
        super().__init__(f"{candidates} candidate assignments exceed the budget of {budget}")
        self.candidates = candidates
        self.budget = budget


class FieldMismatch(FieldError):
    """The Hopf algebra's field does not embed in the test ring's field."""


class GroupAxiomError(VerificationError):
    """The convolution table is not a group table (the Hopf input is invalid)."""


Images = tuple[Vector, ...]


@dataclass
class PointsGroup:
    hopf: HopfAlgebra
    ring: GradedAlgebra
    elements: list[Morphism]
    images: list[Images]
    identity: int
    cayley: list[list[int]]
    inverse: list[int]
    report: Report

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, images: Sequence[Sequence[Raw]]) -> int:
        return self.images.index(tuple(tuple(v) for v in images))

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self.cayley[cur][i]
            k += 1
        return k

    def order_profile(self) -> list[int]:
        return sorted(self.element_order(i) for i in range(self.order))

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[i][j] == self.cayley[j][i] for i in range(n) for j in range(i + 1, n))

    def is_cyclic(self) -> bool:
        return any(self.element_order(i) == self.order for i in range(self.order))

    def format_point(self, i: int) -> str:
        names = self.hopf.algebra.presentation.generator_names
        parts = [f"{g} -> {self.ring.format(v)}" for g, v in zip(names, self.images[i])]
        return "{" + ", ".join(parts) + "}"


def order_profile(g: PointsGroup) -> list[int]:
    return g.order_profile()


def homogeneous_elements(r: GradedAlgebra, degree: int) -> list[Vector]:
    """Every element of ``r`` of the given degree, in lexicographic coordinate order."""
    F = r.field
    if F.q is None:
        raise PreconditionError("test rings over QQ have infinitely many points")
    idx = r.indices_of_degree(degree)
    out = []
    for coeffs in itertools.product(range(F.q), repeat=len(idx)):
        v = [0] * r.dim
        for i, c in zip(idx, coeffs):
            v[i] = c
        out.append(tuple(v))
    return out


def nil_set(r: GradedAlgebra, m: int, degree: int) -> list[Vector]:
    """All ``x`` of the given degree with ``x^m = 0``."""
    if m < 1:
        raise ValueError("exponent must be positive")
    if degree not in set(r.degrees):
        return [r.zero()]
    return [x for x in homogeneous_elements(r, degree) if not any(r.power(x, m))]


def base_change(h: HopfAlgebra, spec: FieldSpec) -> HopfAlgebra:
    """``h`` with its scalars pushed into a larger field."""
    if h.spec == spec:
        return h
    p = h.algebra.presentation
    if p is None:
        raise FieldMismatch(f"cannot base-change {h.name} without a presentation")
    try:
        emb = embed_field(h.spec, spec)
    except FieldError as exc:
        raise FieldMismatch(str(exc)) from None
    return hopf_from_presentation(p.mapped(spec, emb))


def _rational_roots(rel) -> list[Fraction]:
    import sympy

    t = sympy.Symbol("t")
    poly = t**rel.exponent - sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * t**k for k, c in rel.rhs)
    return sorted(Fraction(int(r.p), int(r.q)) for r in sympy.roots(sympy.Poly(poly, t), filter="Q"))


def _rational_choices(p, g, r: GradedAlgebra) -> list[Vector]:
    """Images of ``g`` in a ring over QQ, when they form a finite computable set."""
    idx = r.indices_of_degree(g.degree)
    if not idx:
        return [r.zero()]
    rel = p.relation_for(g.name)
    if g.degree == 0 and len(idx) == 1 and rel is not None:
        return [r.scale(c, r.unit) for c in _rational_roots(rel)]
    raise PreconditionError(f"test ring over QQ has infinitely many candidate images for {g.name}")


def _raw_choices(h: HopfAlgebra, r: GradedAlgebra) -> list[list[Vector]] | list[int]:
    p = h.algebra.presentation
    if r.field.q is None:
        return [_rational_choices(p, g, r) for g in p.generators]
    return [r.field.q ** len(r.indices_of_degree(g.degree)) for g in p.generators]


def candidate_count(h: HopfAlgebra, r: GradedAlgebra) -> int:
    """Number of generator-image tuples the search would examine."""
    total = 1
    for c in _raw_choices(h, r):
        total *= c if isinstance(c, int) else len(c)
    return total


def _relation_ok(p, g, r: GradedAlgebra, v: Vector) -> bool:
    rel = p.relation_for(g.name)
    if rel is None:
        return True
    lhs = r.power(v, rel.exponent)
    rhs = r.lincomb((c, r.power(v, k)) for k, c in rel.rhs)
    return lhs == rhs


def enumerate_points(h: HopfAlgebra, r: GradedAlgebra, budget: int = DEFAULT_BUDGET) -> PointsGroup:
    """Every graded algebra map ``h.algebra -> r`` and the group they form under convolution.

    Candidates are tuples of homogeneous generator images of matching degree,
    taken in lexicographic order; the search refuses to start when there are
    more than ``budget`` of them. Over QQ only rings whose relevant graded
    pieces give finitely many images (rational roots in degree 0) are accepted.
    """
    if not r.is_graded_commutative():
        raise PreconditionError("test ring must be graded-commutative")
    if h.spec != r.spec:
        h = base_change(h, r.spec)
    h = ensure_antipode(h)
    a = h.algebra
    p = a.presentation
    if p is None:
        raise PreconditionError("points need a Hopf algebra given by generators and relations")
    n = candidate_count(h, r)
    if n > budget:
        raise BudgetExceeded(n, budget)
    if r.field.q is None:
        choices = _raw_choices(h, r)
    else:
        # relations only involve one generator, so they filter each coordinate separately
        choices = [[v for v in homogeneous_elements(r, g.degree) if _relation_ok(p, g, r, v)] for g in p.generators]
    elements: list[Morphism] = []
    images: list[Images] = []
    for combo in itertools.product(*choices):
        try:
            m = make_morphism(a, r, combo)
        except MorphismError:
            continue
        elements.append(m)
        images.append(tuple(combo))
    return _build_group(h, r, elements, images)


def _build_group(h: HopfAlgebra, r: GradedAlgebra, elements: list[Morphism], images: list[Images]) -> PointsGroup:
    report = Report()
    lookup = {m.columns: i for i, m in enumerate(elements)}
    report.add("points-distinct", len(lookup) == len(elements))
    e = unit_counit(h, r)
    identity = lookup.get(e.columns)
    if identity is None:
        raise GroupAxiomError("the unit-after-counit point is missing", report)
    n = len(elements)
    cayley = []
    for f in elements:
        row = []
        for g in elements:
            k = lookup.get(convolution(f, g, h).columns)
            if k is None:
                report.add("closed", False, "a convolution product is not an algebra map")
                raise GroupAxiomError("convolution does not close on the points", report)
            row.append(k)
        cayley.append(row)
    report.add("closed", True)
    inverse = []
    for f in elements:
        k = lookup.get(f.compose(h.antipode).columns)
        if k is None:
            raise GroupAxiomError("precomposition with the antipode leaves the points", report)
        inverse.append(k)
    w = next(((i, j, k) for i in range(n) for j in range(n) for k in range(n)
              if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]]), None)
    report.add("associative", w is None, w and str(w))
    bad = next((i for i in range(n) if cayley[identity][i] != i or cayley[i][identity] != i), None)
    report.add("identity", bad is None, None if bad is None else str(bad))
    bad = next((i for i in range(n) if cayley[i][inverse[i]] != identity or cayley[inverse[i]][i] != identity), None)
    report.add("inverses", bad is None, None if bad is None else str(bad))
    if not report.passed:
        raise GroupAxiomError("convolution table is not a group", report)
    return PointsGroup(h, r, elements, images, identity, cayley, inverse, report)


Law = Callable[[Images, Images], Sequence[Sequence[Raw]]]


def verify_law(g: PointsGroup, law: Law) -> Report:
    """Compare the convolution table against a closed-form law on generator images, on all pairs."""
    report = Report()
    n = g.order
    bad = None
    for i in range(n):
        for j in range(n):
            want = tuple(tuple(v) for v in law(g.images[i], g.images[j]))
            if g.images[g.cayley[i][j]] != want:
                bad = (i, j)
                break
        if bad:
            break
    report.add("law-on-all-pairs", bad is None, bad and f"{g.format_point(bad[0])} * {g.format_point(bad[1])}")
    return report


def verify_additive(g: PointsGroup) -> Report:
    """For ``k[t]/(t^m)`` with ``t`` primitive: points are the nil set and convolution is addition."""
    p = g.hopf.algebra.presentation
    report = Report()
    if p is None or len(p.generators) != 1:
        raise PreconditionError("additive comparison needs a single generator")
    gen = p.generators[0]
    rel = p.relation_for(gen.name)
    m = rel.exponent if rel is not None and not rel.rhs else None
    if m is None:
        raise PreconditionError("additive comparison needs a relation t^m = 0")
    nil = nil_set(g.ring, m, gen.degree)
    got = sorted(imgs[0] for imgs in g.images)
    report.add("points-are-nil-set", got == sorted(nil), f"{len(got)} points, {len(nil)} nil elements")
    report.extend(verify_law(g, lambda x, y: (g.ring.add(x[0], y[0]),)).checks)
    return report


def ring_from_text(text: str) -> GradedAlgebra:
    """A test ring written in the presentation grammar (coalgebra lines are ignored)."""
    from .cli.parser import parse_presentation

    return build_algebra(parse_presentation(text))


def invariants_match(g: PointsGroup, profile: Sequence[int], abelian: bool | None = None) -> bool:
    if Counter(g.order_profile()) != Counter(profile):
        return False
    return abelian is None or g.is_abelian() == abelian


__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "FieldMismatch",
    "GroupAxiomError",
    "PointsGroup",
    "base_change",
    "candidate_count",
    "enumerate_points",
    "homogeneous_elements",
    "invariants_match",
    "nil_set",
    "order_profile",
    "ring_from_text",
    "verify_additive",
    "verify_law",
]
