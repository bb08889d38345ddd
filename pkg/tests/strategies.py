"""Hypothesis strategies for random presentations.

``hopf_presentations`` builds tensor products of blocks that are known to be
Hopf algebras (grouplike cyclic, primitive truncated, skew-primitive over a
grouplike, a Milnor-type pair in characteristic 2), so every draw is a valid
input for the Hopf-level properties. ``algebra_presentations`` draws bare
algebras with arbitrary degree-0 relations for the decomposition properties.
"""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from grhopf.exactfield import FieldSpec, get_field
from grhopf.gralg.presentation import Generator, Presentation, Relation, normalize_poly, normalize_tensor_poly

FIELDS = [FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5), FieldSpec.gf(2, 2), FieldSpec.rationals()]
FINITE_FIELDS = [s for s in FIELDS if s.characteristic > 0]
NAMES = "abcdefgh"
MAX_DIM = 24


def _mono(n: int, i: int | None = None, e: int = 1, extra: dict | None = None) -> tuple[int, ...]:
    m = [0] * n
    if i is not None:
        m[i] = e
    for j, k in (extra or {}).items():
        m[j] += k
    return tuple(m)


@st.composite
def hopf_presentations(draw, fields=FIELDS, allow_truncation: bool = True, max_dim: int = MAX_DIM):
    spec = draw(st.sampled_from(fields))
    F = get_field(spec)
    p = spec.characteristic
    kinds = draw(st.lists(st.sampled_from(["grouplike", "primitive", "skew", "milnor"]), min_size=1, max_size=3))
    gens: list[Generator] = []
    rels: list[Relation] = []
    blocks = []  # (kind, generator indices, data)
    dim = 1
    truncation = None
    grouplikes: list[tuple[int, int]] = []
    for kind in kinds:
        i = len(gens)
        if kind == "grouplike":
            order = draw(st.integers(2, 4))
            if dim * order > max_dim:
                continue
            gens.append(Generator(NAMES[i], 0))
            rels.append(Relation(NAMES[i], order, ((0, 1),)))
            blocks.append(("grouplike", i, order))
            grouplikes.append((i, order))
            dim *= order
        elif kind == "primitive":
            d = draw(st.integers(0, 3))
            if p == 0:
                if d % 2 == 1:
                    height = 2
                elif allow_truncation and d > 0:
                    height = None
                else:
                    continue
            elif p != 2 and d % 2 == 1:
                height = 2
            else:
                height = p ** draw(st.integers(1, 2 if p == 2 else 1))
            if height is None:
                if truncation is None:
                    truncation = draw(st.integers(d, 3 * d))
                est = truncation // d + 1
            else:
                est = height
            if dim * est > max_dim:
                continue
            gens.append(Generator(NAMES[i], d))
            if height is not None:
                rels.append(Relation(NAMES[i], height, ()))
            blocks.append(("primitive", i, None))
            dim *= est
        elif kind == "skew":
            if not grouplikes:
                continue
            d = draw(st.sampled_from([1, 3] if p != 2 else [0, 1, 2]))
            if d == 0 and p == 2:
                d = 1
            if dim * 2 > max_dim:
                continue
            g, order = draw(st.sampled_from(grouplikes))
            gens.append(Generator(NAMES[i], d))
            rels.append(Relation(NAMES[i], 2, ()))
            blocks.append(("skew", i, (g, order)))
            dim *= 2
        elif kind == "milnor":
            if spec != FieldSpec.gf(2) or dim * 8 > max_dim or i + 2 > len(NAMES):
                continue
            gens.append(Generator(NAMES[i], 1))
            gens.append(Generator(NAMES[i + 1], 3))
            rels.append(Relation(NAMES[i], 4, ()))
            rels.append(Relation(NAMES[i + 1], 2, ()))
            blocks.append(("milnor", i, None))
            dim *= 8
    if not gens:
        gens.append(Generator("a", 0))
        rels.append(Relation("a", 2, ((0, 1),)))
        blocks.append(("grouplike", 0, 2))
    n = len(gens)
    one = _mono(n)
    counit, comul, anti = {}, {}, {}
    for kind, i, data in blocks:
        name = gens[i].name
        x = _mono(n, i)
        if kind == "grouplike":
            counit[name] = 1
            comul[name] = normalize_tensor_poly(spec, [((x, x), 1)])
            anti[name] = normalize_poly(spec, [(_mono(n, i, data - 1), 1)])
        elif kind == "primitive":
            counit[name] = 0
            comul[name] = normalize_tensor_poly(spec, [((x, one), 1), ((one, x), 1)])
            anti[name] = normalize_poly(spec, [(x, F.neg(1))])
        elif kind == "skew":
            g, order = data
            counit[name] = 0
            comul[name] = normalize_tensor_poly(spec, [((x, one), 1), ((_mono(n, g), x), 1)])
            anti[name] = normalize_poly(spec, [(_mono(n, i, 1, {g: order - 1}), F.neg(1))])
        elif kind == "milnor":
            n1, n2 = gens[i].name, gens[i + 1].name
            x1, x2 = x, _mono(n, i + 1)
            counit[n1] = counit[n2] = 0
            comul[n1] = normalize_tensor_poly(spec, [((x1, one), 1), ((one, x1), 1)])
            comul[n2] = normalize_tensor_poly(spec, [((x2, one), 1), ((_mono(n, i, 2), x1), 1), ((one, x2), 1)])
            anti[n1] = normalize_poly(spec, [(x1, 1)])
            anti[n2] = normalize_poly(spec, [(x2, 1), (_mono(n, i, 3), 1)])
    order = [g.name for g in gens]
    keep_antipode = draw(st.booleans())
    rels_by = {r.generator: r for r in rels}
    return Presentation(
        "h",
        spec,
        tuple(gens),
        tuple(rels_by[nm] for nm in order if nm in rels_by),
        truncation,
        tuple((nm, counit[nm]) for nm in order),
        tuple((nm, comul[nm]) for nm in order),
        tuple((nm, anti[nm]) for nm in order) if keep_antipode else (),
    )


@st.composite
def algebra_presentations(draw, fields=FIELDS, max_dim: int = MAX_DIM):
    """Commutative algebras: degree-0 generators with random monic relations, plus nilpotent ones."""
    spec = draw(st.sampled_from(fields))
    F = get_field(spec)
    p = spec.characteristic
    ngen = draw(st.integers(1, 3))
    gens, rels = [], []
    dim = 1
    for i in range(ngen):
        d = draw(st.sampled_from([0, 0, 1, 2]))
        if d > 0 and p != 2 and d % 2 == 1:
            e = 2
        else:
            e = draw(st.integers(2, 4))
        if dim * e > max_dim:
            break
        name = NAMES[i]
        gens.append(Generator(name, d))
        if d == 0:
            if p == 0:
                coeffs = draw(st.lists(st.integers(-3, 3), min_size=e, max_size=e))
                coeffs = [Fraction(c, draw(st.sampled_from([1, 1, 2]))) for c in coeffs]
            else:
                coeffs = draw(st.lists(st.integers(0, F.q - 1), min_size=e, max_size=e))
            rhs = tuple((k, c) for k, c in enumerate(coeffs) if c != 0)
        else:
            rhs = ()
        rels.append(Relation(name, e, rhs))
        dim *= e
    if not gens:
        gens, rels = [Generator("a", 0)], [Relation("a", 2, ())]
    return Presentation("r", spec, tuple(gens), tuple(rels))


def presentations():
    return st.one_of(hopf_presentations(), algebra_presentations())
