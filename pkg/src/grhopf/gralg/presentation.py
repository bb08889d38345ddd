"""Presentations: generators with degrees, univariate power relations, coalgebra data."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from ..exactfield import FieldSpec, Raw, get_field

Monomial = tuple[int, ...]
Poly = tuple[tuple[Monomial, Raw], ...]
TensorPoly = tuple[tuple[tuple[Monomial, Monomial], Raw], ...]


class PresentationError(ValueError):
    """A presentation violates its invariants (homogeneity, finiteness, ...)."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


@dataclass(frozen=True)
class Relation:
    """``generator ** exponent == sum(c * generator ** k for k, c in rhs)``."""

    generator: str
    exponent: int
    rhs: tuple[tuple[int, Raw], ...] = ()


@dataclass(frozen=True)
class Presentation:
    name: str
    field: FieldSpec
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...] = ()
    truncation: int | None = None
    counit: tuple[tuple[str, Raw], ...] = ()
    comul: tuple[tuple[str, TensorPoly], ...] = ()
    antipode: tuple[tuple[str, Poly], ...] = ()

    @property
    def generator_names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise PresentationError(f"unknown generator {name!r}")

    def relation_for(self, name: str) -> Relation | None:
        return next((r for r in self.relations if r.generator == name), None)

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators))

    def has_coalgebra(self) -> bool:
        return bool(self.comul)

    def with_truncation(self, degree: int | None) -> "Presentation":
        return replace(self, truncation=degree)

    def without_antipode(self) -> "Presentation":
        return replace(self, antipode=())

    def mapped(self, spec: FieldSpec, embed) -> "Presentation":
        """The same presentation with every scalar pushed through ``embed``."""

        def mp(poly):
            return tuple((m, embed(c)) for m, c in poly)

        return Presentation(
            self.name,
            spec,
            self.generators,
            tuple(Relation(r.generator, r.exponent, tuple((k, embed(c)) for k, c in r.rhs)) for r in self.relations),
            self.truncation,
            tuple((g, embed(c)) for g, c in self.counit),
            tuple((g, mp(t)) for g, t in self.comul),
            tuple((g, mp(t)) for g, t in self.antipode),
        )

    def validate(self) -> None:
        """Check generator names, relation shape and homogeneity of all data."""
        names = self.generator_names
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names")
        for g in self.generators:
            if g.degree < 0:
                raise PresentationError(f"generator {g.name} has negative degree")
        seen = set()
        for r in self.relations:
            check_relation(self, r)
            if r.generator in seen:
                raise PresentationError(f"second relation for {r.generator}")
            seen.add(r.generator)
        for name, poly in self.comul:
            check_comul(self, name, poly)
        for name, c in self.counit:
            check_counit(self, name, c)
        for name, poly in self.antipode:
            check_homogeneous(self, name, poly, "antipode")


def check_relation(p: Presentation, rel: Relation) -> None:
    i = p.index(rel.generator)
    d = p.generators[i].degree
    if rel.exponent < 2:
        raise PresentationError(f"relation exponent for {rel.generator} must be at least 2")
    for k, c in rel.rhs:
        if c == 0:
            continue
        if k >= rel.exponent or k < 0:
            raise PresentationError(f"relation for {rel.generator}: right side has power {k} >= {rel.exponent}")
        if k * d != rel.exponent * d:
            raise PresentationError(
                f"inhomogeneous relation: {rel.generator}^{rel.exponent} has degree {rel.exponent * d}"
                f" but {rel.generator}^{k} has degree {k * d}"
            )
    char = p.field.characteristic
    if char != 2 and d % 2 == 1 and rel.exponent > 2:
        raise PresentationError(
            f"{rel.generator} has odd degree in characteristic {char}, so {rel.generator}^2 = 0 is forced;"
            f" relation exponent {rel.exponent} would demand a nonzero square"
        )


def check_homogeneous(p: Presentation, name: str, poly: Poly, what: str) -> None:
    d = p.generators[p.index(name)].degree
    for mono, c in poly:
        if c != 0 and p.monomial_degree(mono) != d:
            raise PresentationError(
                f"inhomogeneous {what} image for {name}: term of degree {p.monomial_degree(mono)}, expected {d}"
            )


def check_comul(p: Presentation, name: str, poly: TensorPoly) -> None:
    d = p.generators[p.index(name)].degree
    for (left, right), c in poly:
        deg = p.monomial_degree(left) + p.monomial_degree(right)
        if c != 0 and deg != d:
            raise PresentationError(f"inhomogeneous comul image for {name}: term of degree {deg}, expected {d}")


def check_counit(p: Presentation, name: str, c: Raw) -> None:
    d = p.generators[p.index(name)].degree
    if d != 0 and c != 0:
        raise PresentationError(f"counit of {name} must vanish: it has degree {d}")


def koszul_parity(e: Monomial, f: Monomial, degrees: Iterable[int]) -> int:
    """Parity of the sign picked up when sorting ``x^e * x^f`` into normal order."""
    degs = list(degrees)
    odd = [i for i, d in enumerate(degs) if d % 2]
    s = 0
    for a, i in enumerate(odd):
        if e[i]:
            for j in odd[:a]:
                s += e[i] * f[j]
    return s & 1


def normalize_poly(spec: FieldSpec, terms: Mapping[Monomial, Raw] | Iterable[tuple[Monomial, Raw]]) -> Poly:
    F = get_field(spec)
    acc: dict[Monomial, Raw] = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for m, c in items:
        acc[m] = F.add(acc.get(m, F.zero), c)
    return tuple(sorted((m, c) for m, c in acc.items() if c != 0))


def normalize_tensor_poly(spec: FieldSpec, terms) -> TensorPoly:
    F = get_field(spec)
    acc: dict = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for m, c in items:
        acc[m] = F.add(acc.get(m, F.zero), c)
    return tuple(sorted((m, c) for m, c in acc.items() if c != 0))


def monomial_label(names: list[str], mono: Monomial) -> str:
    parts = []
    for n, e in zip(names, mono):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts) if parts else "1"
