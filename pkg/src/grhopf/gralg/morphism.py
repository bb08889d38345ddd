"""Degree-preserving linear maps between graded algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactfield import FieldError, Matrix, Raw
from .algebra import AlgebraError, GradedAlgebra, Vector


class MorphismError(ValueError):
    """A proposed algebra map fails a degree, relation or multiplicativity check."""


@dataclass(frozen=True)
class Morphism:
    """Linear map given by the target coordinates of each source basis vector.

    ``certified`` is true only when the map has been checked to be a unital,
    multiplicative, degree-preserving algebra map.
    """

    source: GradedAlgebra
    target: GradedAlgebra
    columns: tuple[Vector, ...]
    certified: bool = False

    def __call__(self, v: Sequence[Raw]) -> Vector:
        return self.apply(v)

    def apply(self, v: Sequence[Raw]) -> Vector:
        return self.target.lincomb((c, col) for c, col in zip(v, self.columns) if c != 0)

    def compose(self, other: "Morphism") -> "Morphism":
        """``self ∘ other``."""
        if other.target is not self.source:
            raise MorphismError("composition of maps with mismatched middle algebra")
        cols = tuple(self.apply(c) for c in other.columns)
        return Morphism(other.source, self.target, cols, self.certified and other.certified)

    def matrix(self) -> Matrix:
        rows = tuple(tuple(col[i] for col in self.columns) for i in range(self.target.dim))
        return Matrix(self.source.spec, rows, self.source.dim)

    def is_identity(self) -> bool:
        return self.source is self.target and all(
            col == self.source.basis_vector(i) for i, col in enumerate(self.columns)
        )

    def degree_witness(self) -> int | None:
        for i, col in enumerate(self.columns):
            if not self.target.is_homogeneous(col, self.source.degrees[i]):
                return i
        return None

    def is_degree_preserving(self) -> bool:
        return self.degree_witness() is None

    def multiplicativity_witness(self) -> tuple[int, int] | None:
        s, t = self.source, self.target
        for i in range(s.dim):
            for j in range(s.dim):
                lhs = self.apply(s.mul(s.basis_vector(i), s.basis_vector(j)))
                rhs = t.mul(self.columns[i], self.columns[j])
                if lhs != rhs:
                    return (i, j)
        return None

    def preserves_unit(self) -> bool:
        return self.apply(self.source.unit) == self.target.unit

    def is_algebra_map(self) -> bool:
        return (
            self.is_degree_preserving()
            and self.preserves_unit()
            and self.multiplicativity_witness() is None
        )

    def certify(self) -> "Morphism":
        w = self.degree_witness()
        if w is not None:
            raise MorphismError(f"image of basis element {self.source.labels[w]} has the wrong degree")
        if not self.preserves_unit():
            raise MorphismError("unit is not sent to unit")
        w2 = self.multiplicativity_witness()
        if w2 is not None:
            i, j = w2
            raise MorphismError(
                f"not multiplicative on {self.source.labels[i]} * {self.source.labels[j]}"
            )
        return Morphism(self.source, self.target, self.columns, True)

    def generator_images(self) -> list[Vector]:
        return [self.apply(g) for g in self.source.generator_vectors()]


def linear_map(src: GradedAlgebra, tgt: GradedAlgebra, columns: Sequence[Sequence[Raw]]) -> Morphism:
    if src.spec != tgt.spec:
        raise FieldError(f"field mismatch: {src.spec} vs {tgt.spec}")
    if len(columns) != src.dim or any(len(c) != tgt.dim for c in columns):
        raise MorphismError("matrix shape does not match the algebras")
    return Morphism(src, tgt, tuple(tuple(c) for c in columns))


def identity_map(a: GradedAlgebra) -> Morphism:
    return Morphism(a, a, tuple(a.basis_vector(i) for i in range(a.dim)), True)


def extend_on_generators(src: GradedAlgebra, tgt: GradedAlgebra, images: Sequence[Sequence[Raw]]) -> Morphism:
    """Linear map sending each normal monomial to the ordered product of generator images.

    Nothing is verified; see :func:`make_morphism`.
    """
    p = src.presentation
    if p is None or src.monomials is None:
        raise AlgebraError("source algebra has no presentation")
    if len(images) != len(p.generators):
        raise MorphismError(f"expected {len(p.generators)} generator images, got {len(images)}")
    imgs = [tuple(v) for v in images]
    cache: dict[tuple[int, int], Vector] = {}

    def gpow(i: int, e: int) -> Vector:
        key = (i, e)
        if key not in cache:
            cache[key] = tgt.power(imgs[i], e)
        return cache[key]

    cols = []
    for mono in src.monomials:
        acc = tgt.unit
        for i, e in enumerate(mono):
            if e:
                acc = tgt.mul(acc, gpow(i, e))
        cols.append(acc)
    return Morphism(src, tgt, tuple(cols))


def make_morphism(src: GradedAlgebra, tgt: GradedAlgebra, generator_images: Sequence[Sequence[Raw]]) -> Morphism:
    """Certified algebra map determined by the images of the generators.

    Raises :class:`MorphismError` naming the offending generator or relation.
    """
    if src.spec != tgt.spec:
        raise FieldError(f"field mismatch: {src.spec} vs {tgt.spec}")
    p = src.presentation
    if p is None:
        raise AlgebraError("source algebra has no presentation")
    imgs = [tuple(v) for v in generator_images]
    if len(imgs) != len(p.generators):
        raise MorphismError(f"expected {len(p.generators)} generator images, got {len(imgs)}")
    for g, v in zip(p.generators, imgs):
        if len(v) != tgt.dim:
            raise MorphismError(f"image of {g.name} has length {len(v)}, target has dimension {tgt.dim}")
        if not tgt.is_homogeneous(v, g.degree):
            raise MorphismError(f"image of {g.name} is not homogeneous of degree {g.degree}")
    for g, v in zip(p.generators, imgs):
        rel = p.relation_for(g.name)
        if rel is None:
            continue
        lhs = tgt.power(v, rel.exponent)
        rhs = tgt.lincomb((c, tgt.power(v, k)) for k, c in rel.rhs)
        if lhs != rhs:
            raise MorphismError(f"relation {g.name}^{rel.exponent} = ... is not respected")
    m = extend_on_generators(src, tgt, imgs)
    try:
        return m.certify()
    except MorphismError as exc:
        raise MorphismError(f"{exc} (generator images violate an implicit relation or the truncation)") from None


__all__ = [
    "Morphism",
    "MorphismError",
    "extend_on_generators",
    "identity_map",
    "linear_map",
    "make_morphism",
]
