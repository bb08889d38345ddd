"""Nilradicals, idempotents and the splitting of a finite graded algebra into gr-local factors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2
from typing import Sequence

from ..exactfield import FieldSpec, Raw, Subspace, nullspace
from .algebra import (
    AlgebraError,
    GradedAlgebra,
    QuotientData,
    SubalgebraData,
    Vector,
    degree_zero_part,
    quotient_algebra,
    subalgebra,
)
from .morphism import Morphism


@dataclass(frozen=True)
class ResidueField:
    """Residue field of a local factor, as an extension of the base field.

    ``polynomial`` (coefficients from the constant term up) is a defining
    polynomial over the base field; it is only recorded over QQ, where the
    extension is not one of the supported field types.
    """

    base: FieldSpec
    degree: int
    polynomial: tuple[Fraction, ...] | None = None

    @property
    def spec(self) -> FieldSpec | None:
        """The residue field as a supported field, when it is one."""
        if self.degree == 1:
            return self.base
        if self.base.characteristic == 0:
            return None
        return FieldSpec.gf(self.base.characteristic, self.base.extension_degree * self.degree)

    def __str__(self) -> str:
        if self.degree == 1:
            return str(self.base)
        if self.base.characteristic > 0:
            return str(self.spec)
        return f"QQ[t]/({_format_qq_poly(self.polynomial)})"


def _format_qq_poly(coeffs: Sequence[Fraction]) -> str:
    parts = []
    for k in reversed(range(len(coeffs))):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


@dataclass
class Component:
    """One factor ``A e`` of a decomposition."""

    idempotent: Vector
    sub: SubalgebraData
    projection: Morphism
    residue: ResidueField
    maximal_ideal: Subspace

    @property
    def algebra(self) -> GradedAlgebra:
        return self.sub.algebra

    @property
    def dim(self) -> int:
        return self.sub.algebra.dim


@dataclass
class Decomposition:
    algebra: GradedAlgebra
    idempotents: list[Vector]
    components: list[Component]
    nilradical0: Subspace
    counit_component: int | None = None

    @property
    def residue_fields(self) -> list[ResidueField]:
        return [c.residue for c in self.components]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def is_gr_local(self) -> bool:
        """Degree-zero part local, i.e. a unique homogeneous maximal ideal."""
        return len(self.components) == 1

    @property
    def spectrum_connected(self) -> bool:
        return len(self.idempotents) == 1

    def all_idempotents(self) -> list[Vector]:
        """Every idempotent: the sums over subsets of the primitive family."""
        a = self.algebra
        out = []
        for mask in itertools.product((0, 1), repeat=len(self.idempotents)):
            v = a.zero()
            for bit, e in zip(mask, self.idempotents):
                if bit:
                    v = a.add(v, e)
            out.append(v)
        return sorted(set(out), key=_vector_key)


def _vector_key(v: Sequence[Raw]) -> tuple:
    return tuple((0, x) if isinstance(x, int) else (1, float(x), x.numerator, x.denominator) for x in v)


# -- nilradical ---------------------------------------------------------------


def _check_commutative(a: GradedAlgebra) -> None:
    w = a.graded_commutativity_witness()
    if w is not None:
        i, j = w
        raise AlgebraError(f"not graded-commutative: {a.labels[i]} and {a.labels[j]}")


def nilradical_degree0(a0: GradedAlgebra) -> Subspace:
    """Nilradical of a commutative algebra concentrated in degree 0.

    In characteristic p it is the kernel of ``x -> x^(p^m)`` with
    ``p^m >= dim``; that map is semilinear, so the kernel of its matrix is
    pulled back through the inverse Frobenius of the base field. Over QQ it
    is the radical of the trace form ``(x, y) -> tr(L_xy)``.
    """
    F = a0.field
    n = a0.dim
    if n == 0:
        return Subspace(F, 0)
    if F.p > 0:
        m = 1
        while F.p**m < n:
            m += 1
        q = F.p**m
        images = [a0.power(a0.basis_vector(i), q) for i in range(n)]
        rows = [[images[i][k] for i in range(n)] for k in range(n)]
        ker = nullspace(F, rows, n)
        vecs = [[F.frobenius_inverse(c, m) if c != 0 else 0 for c in v] for v in ker]
        return Subspace(F, n, vecs)
    mult = [[a0.mul(a0.basis_vector(i), a0.basis_vector(j)) for j in range(n)] for i in range(n)]
    traces = [_trace(a0, a0.basis_vector(k)) for k in range(n)]
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            t = 0
            for k, c in enumerate(mult[i][j]):
                if c != 0:
                    t = F.add(t, F.mul(c, traces[k]))
            row.append(t)
        gram.append(row)
    return Subspace(F, n, nullspace(F, gram, n))


def _trace(a: GradedAlgebra, x: Sequence[Raw]) -> Raw:
    F = a.field
    t = 0
    for j in range(a.dim):
        t = F.add(t, a.mul(x, a.basis_vector(j))[j])
    return t


# -- idempotents of a reduced algebra ---------------------------------------


def _min_poly(b: GradedAlgebra, z: Sequence[Raw]) -> list[Raw]:
    """Monic minimal polynomial of ``z`` (coefficients from the constant term up)."""
    F = b.field
    powers = [b.unit]
    while True:
        cur = b.mul(powers[-1], z)
        space = Subspace(F, b.dim, powers)
        if space.contains(cur):
            k = len(powers)
            rows = [[powers[i][r] for i in range(k)] + [cur[r]] for r in range(b.dim)]
            ns = nullspace(F, rows, k + 1)
            v = ns[0]
            lead = v[-1]
            return [F.div(c, lead) for c in v]
        powers.append(cur)


def _reduced_idempotents_finite(b: GradedAlgebra) -> list[Vector]:
    """Primitive idempotents of a reduced commutative algebra over GF(q)."""
    F = b.field
    q = F.q
    n = b.dim
    images = [b.power(b.basis_vector(i), q) for i in range(n)]
    rows = [[F.sub(images[i][k], 1 if i == k else 0) for i in range(n)] for k in range(n)]
    fixed = nullspace(F, rows, n)
    family: list[Vector] = [b.unit]
    for z in fixed:
        z = tuple(z)
        split: list[Vector] = []
        for e in family:
            ze = b.mul(z, e)
            for c in F.elements():
                shifted = b.sub(ze, b.scale(c, e))
                piece = b.sub(e, b.mul(e, b.power(shifted, q - 1)))
                if any(x != 0 for x in piece):
                    split.append(piece)
        family = split
        if len(family) == len(fixed):
            break
    return family


def _reduced_idempotents_rational(b: GradedAlgebra) -> tuple[list[Vector], list[tuple[Fraction, ...]]]:
    """Primitive idempotents over QQ via the factorisation of a primitive element's minimal polynomial."""
    import sympy

    F = b.field
    n = b.dim
    t = sympy.Symbol("t")
    for c in itertools.count(1):
        z = b.lincomb((F.from_int(c**i), b.basis_vector(i)) for i in range(n))
        mp = _min_poly(b, z)
        if len(mp) - 1 == n:
            break
        if c > 4 * n + 8:
            raise AlgebraError("no primitive element found for the reduced degree-zero part")
    poly = sympy.Poly([sympy.Rational(x.numerator, x.denominator) for x in reversed(mp)], t, domain="QQ")
    _, factors = poly.factor_list()
    factors = sorted((f for f, _ in factors), key=lambda f: (f.degree(), [str(x) for x in f.all_coeffs()]))
    idems = []
    polys = []
    for i, f in enumerate(factors):
        others = sympy.Poly(1, t, domain="QQ")
        for j, g in enumerate(factors):
            if j != i:
                others = others * g
        inv = sympy.invert(others.as_expr(), f.as_expr(), t)
        ep = sympy.Poly(sympy.expand(others.as_expr() * inv), t, domain="QQ").rem(poly)
        coeffs = [Fraction(int(x.p), int(x.q)) for x in reversed(ep.all_coeffs())]
        e = b.evaluate_polynomial(coeffs, z)
        idems.append(e)
        polys.append(_residue_polynomial(b, e, f.degree()))
    return idems, polys


def _corner_min_poly(b: GradedAlgebra, e: Vector, z: Vector) -> list[Raw]:
    """Minimal polynomial of ``z`` inside the corner ``b e`` (whose unit is ``e``)."""
    F = b.field
    powers = [e]
    while True:
        cur = b.mul(powers[-1], z)
        if Subspace(F, b.dim, powers).contains(cur):
            k = len(powers)
            rows = [[powers[i][r] for i in range(k)] + [cur[r]] for r in range(b.dim)]
            v = nullspace(F, rows, k + 1)[0]
            return [F.div(c, v[-1]) for c in v]
        powers.append(cur)


def _residue_polynomial(b: GradedAlgebra, e: Vector, degree: int) -> tuple[Fraction, ...]:
    """A defining polynomial of the field ``b e``, preferring a basis element as generator."""
    candidates = [b.mul(b.basis_vector(i), e) for i in range(b.dim)]
    for c in itertools.count(1):
        for z in candidates:
            mp = _corner_min_poly(b, e, z)
            if len(mp) - 1 == degree:
                return tuple(Fraction(x) for x in mp)
        candidates = [b.add(candidates[i], b.scale(Fraction(c), candidates[(i + 1) % len(candidates)]))
                      for i in range(len(candidates))]


def lift_idempotent(a: GradedAlgebra, e: Sequence[Raw]) -> Vector:
    """Lift an idempotent modulo a nil ideal with ``e <- 3e^2 - 2e^3``."""
    F = a.field
    three, two = F.from_int(3), F.from_int(2)
    e = tuple(e)
    bound = ceil(log2(max(a.dim, 2))) + 1
    for _ in range(bound + 1):
        e2 = a.mul(e, e)
        if e2 == e:
            return e
        e3 = a.mul(e2, e)
        e = a.sub(a.scale(three, e2), a.scale(two, e3))
    if a.mul(e, e) == e:
        return e
    raise AlgebraError("idempotent lifting did not converge; the kernel is not nil")


# -- the decomposition --------------------------------------------------------


def _counit_of(counit, v: Sequence[Raw], F) -> Raw:
    acc = 0
    for c, e in zip(v, counit):
        if c != 0 and e != 0:
            acc = F.add(acc, F.mul(c, e))
    return acc


def decompose_local(a: GradedAlgebra, counit: Sequence[Raw] | None = None) -> Decomposition:
    """Split ``a`` as a product of gr-local algebras ``a e_i``.

    ``counit`` (the values of the counit on the basis) marks the factor on
    which the counit is 1.
    """
    _check_commutative(a)
    F = a.field
    zero_part = degree_zero_part(a)
    a0 = zero_part.algebra
    nil0 = nilradical_degree0(a0)
    red: QuotientData = quotient_algebra(a0, nil0, name=f"{a.name}_0/N")
    b = red.algebra
    if F.p > 0:
        small = _reduced_idempotents_finite(b)
        polys = [None] * len(small)
    else:
        small, polys = _reduced_idempotents_rational(b)
    found = []
    for e_b, poly in zip(small, polys):
        lifted0 = lift_idempotent(a0, red.lift(e_b))
        e = zero_part.embed(lifted0)
        deg = Subspace(F, b.dim, [b.mul(e_b, b.basis_vector(i)) for i in range(b.dim)]).dim
        found.append((e, deg, poly))
    for (e, _, _), (f, _, _) in itertools.combinations(found, 2):
        if any(x != 0 for x in a.mul(e, f)):
            raise AlgebraError("lifted idempotents are not orthogonal")
    total = a.zero()
    for e, _, _ in found:
        total = a.add(total, e)
    if total != a.unit:
        raise AlgebraError("lifted idempotents do not sum to 1")

    found.sort(key=lambda t: (t[1], _vector_key(t[0])))
    counit_index = None
    if counit is not None:
        for i, (e, _, _) in enumerate(found):
            if _counit_of(counit, e, F) == 1:
                counit_index = i
        if counit_index is not None:
            found.insert(0, found.pop(counit_index))
            counit_index = 0

    components = []
    for e, deg, poly in found:
        span = [a.mul(a.basis_vector(i), e) for i in range(a.dim)]
        span = [v for v in span if any(x != 0 for x in v)]
        homog = _homogeneous_spanning(a, span)
        sub = subalgebra(a, homog, unit=e, name=f"{a.name}e")
        proj_cols = tuple(sub.coords(a.mul(a.basis_vector(i), e)) for i in range(a.dim))
        projection = Morphism(a, sub.algebra, proj_cols, True)
        nil_vecs = [sub.coords(a.mul(zero_part.embed(v), e)) for v in nil0.basis]
        pos = [sub.algebra.basis_vector(i) for i in range(sub.algebra.dim) if sub.algebra.degrees[i] > 0]
        maximal = Subspace(F, sub.algebra.dim, nil_vecs + pos)
        residue = ResidueField(a.spec, deg, poly if deg > 1 else None)
        components.append(Component(e, sub, projection, residue, maximal))
    return Decomposition(a, [c.idempotent for c in components], components, nil0, counit_index)


def _homogeneous_spanning(a: GradedAlgebra, vecs: list[Vector]) -> list[Vector]:
    """Split each vector into its homogeneous parts (the span of ``A e`` is graded)."""
    out = []
    for v in vecs:
        for d in sorted({a.degrees[i] for i, c in enumerate(v) if c != 0}):
            out.append(tuple(c if a.degrees[i] == d else 0 for i, c in enumerate(v)))
    return out


def is_separable(a: GradedAlgebra) -> bool:
    """Concentrated in degree 0 and reduced."""
    if any(d != 0 for d in a.degrees):
        return False
    _check_commutative(a)
    return nilradical_degree0(a).dim == 0


def idempotents_bruteforce(a: GradedAlgebra) -> list[Vector]:
    """Every idempotent of ``a`` by exhaustive search (finite fields only)."""
    F = a.field
    out = []
    for v in itertools.product(list(F.elements()), repeat=a.dim):
        if a.mul(v, v) == v:
            out.append(tuple(v))
    return sorted(out, key=_vector_key)


__all__ = [
    "Component",
    "Decomposition",
    "ResidueField",
    "decompose_local",
    "idempotents_bruteforce",
    "is_separable",
    "lift_idempotent",
    "nilradical_degree0",
]
