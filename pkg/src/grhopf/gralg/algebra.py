"""Finite-dimensional graded algebras given by structure constants."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .. import kernels
from ..exactfield import FieldError, FieldSpec, Raw, Subspace, get_field
from .presentation import (
    Monomial,
    Presentation,
    PresentationError,
    koszul_parity,
    monomial_label,
)

Vector = tuple[Raw, ...]
Table = list[list[tuple[tuple[int, Raw], ...]]]


class AlgebraError(ValueError):
    """Structural problem with an algebra (not closed, not commutative, ...)."""


class GradedAlgebra:
    """A graded algebra on a homogeneous basis.

    ``table[i][j]`` lists the nonzero ``(k, c)`` with ``b_i b_j = sum c b_k``.
    ``unit`` is the coordinate vector of the identity. ``truncation`` marks
    algebras in which every product of degree above it has been set to zero.
    Algebras built from a presentation keep it, with the exponent vector of
    each basis monomial, so maps out of them can be given on generators.
    """

    def __init__(
        self,
        spec: FieldSpec,
        degrees: Sequence[int],
        table: Table,
        unit: Sequence[Raw],
        labels: Sequence[str] | None = None,
        *,
        truncation: int | None = None,
        name: str = "",
        presentation: Presentation | None = None,
        monomials: Sequence[Monomial] | None = None,
    ):
        self.spec = spec
        self.field = get_field(spec)
        self.degrees = tuple(degrees)
        self.table = table
        self.unit = tuple(unit)
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(len(degrees)))
        self.truncation = truncation
        self.name = name
        self.presentation = presentation
        self.monomials = tuple(monomials) if monomials is not None else None
        self._by_degree: dict[int, list[int]] = {}
        for i, d in enumerate(self.degrees):
            self._by_degree.setdefault(d, []).append(i)
        # set by tensor_product
        self.factors: tuple[GradedAlgebra, GradedAlgebra] | None = None
        self.pairs: list[tuple[int, int]] | None = None
        self.pair_index: dict[tuple[int, int], int] | None = None

    # -- shape --------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def characteristic(self) -> int:
        return self.spec.characteristic

    def indices_of_degree(self, d: int) -> list[int]:
        return list(self._by_degree.get(d, ()))

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0

    def hilbert_series(self) -> list[int]:
        return hilbert_series(self)

    @property
    def unit_index(self) -> int | None:
        nz = [i for i, c in enumerate(self.unit) if c != 0]
        if len(nz) == 1 and self.unit[nz[0]] == 1:
            return nz[0]
        return None

    def __repr__(self) -> str:
        return f"GradedAlgebra({self.name or '?'}, dim={self.dim}, over {self.spec})"

    # -- vectors ------------------------------------------------------------

    def zero(self) -> Vector:
        return (0,) * self.dim

    def basis_vector(self, i: int) -> Vector:
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def add(self, u: Sequence[Raw], v: Sequence[Raw]) -> Vector:
        add = self.field.add
        return tuple(add(a, b) for a, b in zip(u, v))

    def sub(self, u: Sequence[Raw], v: Sequence[Raw]) -> Vector:
        sub = self.field.sub
        return tuple(sub(a, b) for a, b in zip(u, v))

    def scale(self, c: Raw, u: Sequence[Raw]) -> Vector:
        if c == 0:
            return self.zero()
        mul = self.field.mul
        return tuple(mul(c, a) if a != 0 else 0 for a in u)

    def neg(self, u: Sequence[Raw]) -> Vector:
        return self.scale(self.field.neg(1), u)

    def lincomb(self, terms: Iterable[tuple[Raw, Sequence[Raw]]]) -> Vector:
        F = self.field
        out = [0] * self.dim
        for c, v in terms:
            if c == 0:
                continue
            for i, a in enumerate(v):
                if a != 0:
                    out[i] = F.add(out[i], F.mul(c, a))
        return tuple(out)

    def mul(self, u: Sequence[Raw], v: Sequence[Raw]) -> Vector:
        F = self.field
        if F.is_prime:
            return tuple(kernels.sparse_mul_mod_p(list(u), list(v), self.table, F.p))
        out = [F.zero] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if b != 0]
        add, mul = F.add, F.mul
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in nz_v:
                c = mul(a, b)
                for k, t in row[j]:
                    out[k] = add(out[k], mul(c, t))
        return tuple(out)

    def power(self, u: Sequence[Raw], e: int) -> Vector:
        result = self.unit
        base = tuple(u)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def evaluate_polynomial(self, coeffs: Sequence[Raw], u: Sequence[Raw]) -> Vector:
        """``sum coeffs[k] * u**k`` by Horner's rule."""
        acc = self.zero()
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, u), self.scale(c, self.unit))
        return acc

    def is_homogeneous(self, v: Sequence[Raw], d: int) -> bool:
        return all(c == 0 or self.degrees[i] == d for i, c in enumerate(v))

    def degree_of(self, v: Sequence[Raw]) -> int | None:
        degs = {self.degrees[i] for i, c in enumerate(v) if c != 0}
        return degs.pop() if len(degs) == 1 else None

    def element(self, v: Sequence[Raw] | int) -> "Element":
        if isinstance(v, int):
            v = self.basis_vector(v)
        return Element(self, tuple(v))

    # -- presentation helpers -----------------------------------------------

    def generator_vectors(self) -> list[Vector]:
        if self.presentation is None:
            raise AlgebraError("algebra has no presentation")
        n = len(self.presentation.generators)
        out = []
        for i in range(n):
            mono = tuple(1 if j == i else 0 for j in range(n))
            out.append(self.monomial_vector(mono))
        return out

    def monomial_vector(self, mono: Monomial) -> Vector:
        """Ordered product ``x_1^{e_1} ... x_n^{e_n}`` reduced to normal form."""
        if self.presentation is None or self.monomials is None:
            raise AlgebraError("algebra has no presentation")
        idx = self._mono_index()
        if mono in idx:
            return self.basis_vector(idx[mono])
        acc = self.unit
        n = len(mono)
        for i, e in enumerate(mono):
            if e:
                g = tuple(1 if j == i else 0 for j in range(n))
                gv = self.basis_vector(idx[g]) if g in idx else self.zero()
                acc = self.mul(acc, self.power(gv, e))
        return acc

    def _mono_index(self) -> dict[Monomial, int]:
        if not hasattr(self, "_mono_idx"):
            self._mono_idx = {m: i for i, m in enumerate(self.monomials)}
        return self._mono_idx

    def evaluate_poly(self, poly) -> Vector:
        """Vector of a presentation polynomial ``((monomial, coeff), ...)``."""
        return self.lincomb((c, self.monomial_vector(m)) for m, c in poly)

    # -- structural checks --------------------------------------------------

    def _sign(self, i: int, j: int) -> Raw:
        if (self.degrees[i] * self.degrees[j]) % 2:
            return self.field.neg(1)
        return 1

    def graded_commutativity_witness(self) -> tuple[int, int] | None:
        F = self.field
        for i in range(self.dim):
            for j in range(i, self.dim):
                lhs = dict(self.table[i][j])
                s = self._sign(i, j)
                rhs = {k: F.mul(s, c) for k, c in self.table[j][i]}
                if lhs != rhs:
                    return (i, j)
        return None

    def is_graded_commutative(self) -> bool:
        return self.graded_commutativity_witness() is None

    def degree0_commutes(self) -> bool:
        zero = self.indices_of_degree(0)
        return all(dict(self.table[i][j]) == dict(self.table[j][i]) for i in zero for j in range(self.dim))

    def associativity_witness(self) -> tuple[int, int, int] | None:
        F = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table[i][j]
                for k in range(self.dim):
                    left: dict[int, Raw] = {}
                    for m, c in ij:
                        for t, d in self.table[m][k]:
                            left[t] = F.add(left.get(t, 0), F.mul(c, d))
                    right: dict[int, Raw] = {}
                    for m, c in self.table[j][k]:
                        for t, d in self.table[i][m]:
                            right[t] = F.add(right.get(t, 0), F.mul(c, d))
                    if {a: b for a, b in left.items() if b != 0} != {a: b for a, b in right.items() if b != 0}:
                        return (i, j, k)
        return None

    def is_associative(self) -> bool:
        return self.associativity_witness() is None

    def is_graded(self) -> bool:
        top = self.truncation
        for i in range(self.dim):
            for j in range(self.dim):
                d = self.degrees[i] + self.degrees[j]
                for k, _ in self.table[i][j]:
                    if self.degrees[k] != d:
                        return False
                if top is not None and d > top and self.table[i][j]:
                    return False
        return True

    def structure_constants(self) -> list[list[dict[int, Raw]]]:
        return [[dict(cell) for cell in row] for row in self.table]

    # -- formatting ---------------------------------------------------------

    def format(self, v: Sequence[Raw], factor: bool = False) -> str:
        return format_vector(self.field, self.labels, v, factor=factor)


def _format_terms(F, labels, v) -> str:
    parts: list[str] = []
    for i in reversed(range(len(v))):
        c = v[i]
        if c == 0:
            continue
        cs = F.format(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        lab = labels[i]
        if lab == "1":
            body = mag
        elif mag == "1":
            body = lab
        else:
            body = f"{mag}*{lab}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def format_vector(F, labels, v: Sequence[Raw], factor: bool = False) -> str:
    """Human-readable linear combination, highest basis index first.

    With ``factor`` over QQ the rational content is pulled out, e.g.
    ``1/3*(x^2 + x + 1)``.
    """
    if factor and F.p == 0:
        nz = [Fraction(c) for c in v if c != 0]
        if nz:
            num = reduce(gcd, (abs(c.numerator) for c in nz))
            den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in nz))
            content = Fraction(num, den)
            lead = next(Fraction(v[i]) for i in reversed(range(len(v))) if v[i] != 0)
            if lead < 0:
                content = -content
            if content != 1:
                inner = tuple(Fraction(c) / content if c != 0 else 0 for c in v)
                return f"{content}*({_format_terms(F, labels, inner)})"
    return _format_terms(F, labels, v)


class Element:
    """An element of a graded algebra with arithmetic operators."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GradedAlgebra, coeffs: Sequence[Raw]):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _other(self, other) -> Vector:
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                raise AlgebraError("elements of different algebras")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.algebra.scale(self.algebra.field.from_fraction(other), self.algebra.unit)
        return NotImplemented

    def __add__(self, other):
        return Element(self.algebra, self.algebra.add(self.coeffs, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Element(self.algebra, self.algebra.sub(self.coeffs, self._other(other)))

    def __rsub__(self, other):
        return Element(self.algebra, self.algebra.sub(self._other(other), self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Element(self.algebra, self.algebra.scale(self.algebra.field.from_fraction(other), self.coeffs))
        return Element(self.algebra, self.algebra.mul(self.coeffs, self._other(other)))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __neg__(self):
        return Element(self.algebra, self.algebra.neg(self.coeffs))

    def __pow__(self, e: int):
        return Element(self.algebra, self.algebra.power(self.coeffs, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def characteristic(self) -> int:
        return self.algebra.characteristic

    @property
    def degree(self) -> int | None:
        return self.algebra.degree_of(self.coeffs)

    def __repr__(self) -> str:
        return f"Element({self.algebra.format(self.coeffs)})"

    def __str__(self) -> str:
        return self.algebra.format(self.coeffs)


# -- construction -----------------------------------------------------------


def _power_reduction(F, cap: int, rhs: dict[int, Raw], reducing: bool) -> list[dict[int, Raw]]:
    """``x^m`` in the basis ``1, x, ..., x^(cap-1)`` for ``m < 2 cap - 1``."""
    top = 2 * cap - 1
    out: list[dict[int, Raw]] = []
    for m in range(top):
        if m < cap:
            out.append({m: 1})
        elif not reducing:
            out.append({})
        else:
            prev = out[m - 1]
            nxt: dict[int, Raw] = {}
            for k, c in prev.items():
                if k + 1 < cap:
                    nxt[k + 1] = F.add(nxt.get(k + 1, 0), c)
                else:
                    for r, g in rhs.items():
                        nxt[r] = F.add(nxt.get(r, 0), F.mul(c, g))
            out.append({k: c for k, c in nxt.items() if c != 0})
    return out


def build_algebra(p: Presentation) -> GradedAlgebra:
    """Normal-monomial basis and Koszul-signed multiplication table of a presentation."""
    p.validate()
    F = get_field(p.field)
    char = p.field.characteristic
    degs = p.degrees
    n = len(degs)
    caps: list[int] = []
    powers: list[list[dict[int, Raw]]] = []
    for g in p.generators:
        rel = p.relation_for(g.name)
        odd_forced = char != 2 and g.degree % 2 == 1
        if rel is not None:
            cap = rel.exponent
            rhs = {k: c for k, c in rel.rhs if c != 0}
            reducing = g.degree == 0 and bool(rhs)
        elif odd_forced:
            cap, rhs, reducing = 2, {}, False
        elif p.truncation is not None and g.degree > 0:
            cap, rhs, reducing = p.truncation // g.degree + 1, {}, False
        elif g.degree == 0:
            raise PresentationError(f"degree-0 generator {g.name} needs a relation to be finite-dimensional")
        else:
            raise PresentationError(f"generator {g.name} has no relation and no truncation degree is set")
        caps.append(cap)
        powers.append(_power_reduction(F, cap, rhs, reducing))

    top = p.truncation
    monomials = [
        m
        for m in itertools.product(*(range(c) for c in caps))
        if top is None or sum(e * d for e, d in zip(m, degs)) <= top
    ]
    index = {m: i for i, m in enumerate(monomials)}
    minus_one = F.neg(1)
    table: Table = []
    for e in monomials:
        row = []
        for f in monomials:
            coeff = minus_one if koszul_parity(e, f, degs) else 1
            terms: list[tuple[tuple[int, ...], Raw]] = [((), coeff)]
            for i in range(n):
                red = powers[i][e[i] + f[i]]
                if not red:
                    terms = []
                    break
                terms = [(t + (k,), F.mul(c, r)) for t, c in terms for k, r in red.items()]
            cell: dict[int, Raw] = {}
            for mono, c in terms:
                j = index.get(mono)
                if j is not None and c != 0:
                    cell[j] = F.add(cell.get(j, 0), c)
            row.append(tuple(sorted((k, c) for k, c in cell.items() if c != 0)))
        table.append(row)
    names = p.generator_names
    unit = [0] * len(monomials)
    unit[index[(0,) * n]] = 1
    return GradedAlgebra(
        p.field,
        [sum(a * d for a, d in zip(m, degs)) for m in monomials],
        table,
        unit,
        [monomial_label(names, m) for m in monomials],
        truncation=top,
        name=p.name,
        presentation=p,
        monomials=monomials,
    )


def field_algebra(spec: FieldSpec) -> GradedAlgebra:
    """The base field as a one-dimensional algebra in degree 0."""
    return GradedAlgebra(spec, [0], [[((0, 1),)]], [1], ["1"], name=str(spec))


def hilbert_series(a: GradedAlgebra) -> list[int]:
    """Dimensions of the graded pieces, from degree 0 up to the top degree."""
    if a.dim == 0:
        return []
    out = [0] * (a.max_degree + 1)
    for d in a.degrees:
        out[d] += 1
    return out


def multiply_series(s: Sequence[int], t: Sequence[int], truncation: int | None = None) -> list[int]:
    if not s or not t:
        return []
    out = [0] * (len(s) + len(t) - 1)
    for i, a in enumerate(s):
        for j, b in enumerate(t):
            out[i + j] += a * b
    if truncation is not None:
        out = out[: truncation + 1]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _tensor_label(a: str, b: str) -> str:
    return f"{a}⊗{b}"


def tensor_product(
    a: GradedAlgebra, b: GradedAlgebra, truncation: int | None | str = "auto"
) -> GradedAlgebra:
    """Graded tensor product with ``(a1⊗b1)(a2⊗b2) = (-1)^(|b1||a2|) a1a2 ⊗ b1b2``.

    With ``truncation="auto"`` the result is truncated at the smaller of the
    factors' truncation degrees (if any); pass ``None`` to keep every pair.
    """
    if a.spec != b.spec:
        raise FieldError(f"field mismatch: {a.spec} vs {b.spec}")
    if truncation == "auto":
        tops = [t for t in (a.truncation, b.truncation) if t is not None]
        truncation = min(tops) if tops else None
    F = a.field
    pairs = [
        (i, j)
        for i in range(a.dim)
        for j in range(b.dim)
        if truncation is None or a.degrees[i] + b.degrees[j] <= truncation
    ]
    index = {pr: k for k, pr in enumerate(pairs)}
    minus_one = F.neg(1)
    table: Table = []
    for i1, j1 in pairs:
        row = []
        for i2, j2 in pairs:
            cell: dict[int, Raw] = {}
            aa = a.table[i1][i2]
            bb = b.table[j1][j2]
            if aa and bb:
                s = minus_one if (b.degrees[j1] * a.degrees[i2]) % 2 else 1
                for k, c in aa:
                    for l, d in bb:
                        t = index.get((k, l))
                        if t is not None:
                            cell[t] = F.add(cell.get(t, 0), F.mul(s, F.mul(c, d)))
            row.append(tuple(sorted((k, c) for k, c in cell.items() if c != 0)))
        table.append(row)
    unit = [0] * len(pairs)
    for i, ca in enumerate(a.unit):
        for j, cb in enumerate(b.unit):
            if ca != 0 and cb != 0 and (i, j) in index:
                unit[index[(i, j)]] = F.mul(ca, cb)
    out = GradedAlgebra(
        a.spec,
        [a.degrees[i] + b.degrees[j] for i, j in pairs],
        table,
        unit,
        [_tensor_label(a.labels[i], b.labels[j]) for i, j in pairs],
        truncation=truncation,
        name=f"{a.name}⊗{b.name}",
    )
    out.factors = (a, b)
    out.pairs = pairs
    out.pair_index = index
    return out


def kron(t: GradedAlgebra, u: Sequence[Raw], v: Sequence[Raw]) -> Vector:
    """``u ⊗ v`` as a vector of the tensor algebra ``t`` (truncated pairs dropped)."""
    F = t.field
    out = [0] * t.dim
    nz_v = [(j, b) for j, b in enumerate(v) if b != 0]
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in nz_v:
            k = t.pair_index.get((i, j))
            if k is not None:
                out[k] = F.add(out[k], F.mul(a, b))
    return tuple(out)


# -- subalgebras and quotients ---------------------------------------------


class SubalgebraData:
    """A subalgebra on a reduced-echelon basis together with its embedding."""

    def __init__(self, algebra: GradedAlgebra, ambient: GradedAlgebra, space: Subspace):
        self.algebra = algebra
        self.ambient = ambient
        self.space = space

    def coords(self, v: Sequence[Raw]) -> Vector:
        return tuple(self.space.coords(v))

    def embed(self, w: Sequence[Raw]) -> Vector:
        return self.ambient.lincomb(zip(w, self.space.basis))

    @property
    def inclusion_columns(self) -> list[Vector]:
        return list(self.space.basis)


def subalgebra(
    a: GradedAlgebra,
    vectors: Iterable[Sequence[Raw]],
    unit: Sequence[Raw] | None = None,
    name: str = "",
) -> SubalgebraData:
    """The span of homogeneous ``vectors`` as an algebra.

    ``unit`` defaults to the unit of ``a``; pass an idempotent to form a
    corner ``a e``. Raises :class:`AlgebraError` when the span is not closed
    under multiplication or does not contain the unit.
    """
    space = Subspace(a.field, a.dim, vectors)
    for v in space.basis:
        if a.degree_of(v) is None:
            raise AlgebraError("subalgebra spanning set is not homogeneous")
    unit = tuple(unit) if unit is not None else a.unit
    if not space.contains(unit):
        raise AlgebraError("span does not contain the unit")
    basis = space.basis
    table: Table = []
    for u in basis:
        row = []
        for v in basis:
            prod = a.mul(u, v)
            if not space.contains(prod):
                raise AlgebraError("span is not closed under multiplication")
            row.append(tuple((k, c) for k, c in enumerate(space.coords(prod)) if c != 0))
        table.append(row)
    sub = GradedAlgebra(
        a.spec,
        [a.degree_of(v) for v in basis],
        table,
        space.coords(unit),
        [a.format(v) for v in basis],
        truncation=a.truncation,
        name=name or f"sub({a.name})",
    )
    return SubalgebraData(sub, a, space)


class QuotientData:
    """A quotient ``a / ideal`` on the standard basis vectors of lowest index independent mod the ideal."""

    def __init__(self, algebra: GradedAlgebra, ambient: GradedAlgebra, ideal: Subspace, section: list[int]):
        self.algebra = algebra
        self.ambient = ambient
        self.ideal = ideal
        self.section = section
        n = ambient.dim
        self._rev = Subspace(ambient.field, n, [tuple(reversed(v)) for v in ideal.basis])

    def reduce(self, v: Sequence[Raw]) -> list[Raw]:
        """Normal form of ``v``: supported on the section indices."""
        return list(reversed(self._rev.reduce(tuple(reversed(v)))))

    def project(self, v: Sequence[Raw]) -> Vector:
        r = self.reduce(v)
        return tuple(r[i] for i in self.section)

    def lift(self, w: Sequence[Raw]) -> Vector:
        out = [0] * self.ambient.dim
        for c, i in zip(w, self.section):
            out[i] = c
        return tuple(out)

    @property
    def projection_columns(self) -> list[Vector]:
        return [self.project(self.ambient.basis_vector(i)) for i in range(self.ambient.dim)]


def ideal_span(a: GradedAlgebra, generators: Iterable[Sequence[Raw]]) -> Subspace:
    """The two-sided ideal generated by ``generators`` (as a subspace)."""
    gens = [tuple(g) for g in generators]
    vecs = []
    for g in gens:
        for i in range(a.dim):
            b = a.basis_vector(i)
            vecs.append(a.mul(b, g))
            vecs.append(a.mul(g, b))
    return Subspace(a.field, a.dim, vecs)


def quotient_algebra(a: GradedAlgebra, ideal: Subspace, name: str = "") -> QuotientData:
    """``a / ideal`` for a homogeneous two-sided ideal."""
    for v in ideal.basis:
        if a.degree_of(v) is None:
            raise AlgebraError("ideal is not homogeneous")
        for i in range(a.dim):
            b = a.basis_vector(i)
            if not (ideal.contains(a.mul(b, v)) and ideal.contains(a.mul(v, b))):
                raise AlgebraError("subspace is not an ideal")
    n = a.dim
    rev = Subspace(a.field, n, [tuple(reversed(v)) for v in ideal.basis])
    section = sorted(n - 1 - i for i in rev.complement_indices())
    data = QuotientData(None, a, ideal, section)
    pos = {i: k for k, i in enumerate(section)}
    table: Table = []
    for i in section:
        row = []
        for j in section:
            prod = [0] * n
            for k, c in a.table[i][j]:
                prod[k] = c
            r = data.reduce(prod)
            row.append(tuple((pos[k], r[k]) for k in section if r[k] != 0))
        table.append(row)
    unit_r = data.reduce(a.unit)
    data.algebra = GradedAlgebra(
        a.spec,
        [a.degrees[i] for i in section],
        table,
        [unit_r[i] for i in section],
        [a.labels[i] for i in section],
        truncation=a.truncation,
        name=name or f"{a.name}/I",
    )
    return data


def degree_zero_part(a: GradedAlgebra) -> SubalgebraData:
    idx = a.indices_of_degree(0)
    return subalgebra(a, [a.basis_vector(i) for i in idx], name=f"{a.name}_0")


__all__ = [
    "AlgebraError",
    "Element",
    "GradedAlgebra",
    "QuotientData",
    "SubalgebraData",
    "Vector",
    "build_algebra",
    "degree_zero_part",
    "field_algebra",
    "format_vector",
    "hilbert_series",
    "ideal_span",
    "kron",
    "multiply_series",
    "quotient_algebra",
    "subalgebra",
    "tensor_product",
]
