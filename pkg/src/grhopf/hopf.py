"""Hopf structures on graded algebras: axioms, antipodes, duals, connectivization, classification."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, NamedTuple, Sequence

from .checks import Check, Report, VerificationError
from .exactfield import FieldSpec, Raw, Subspace, kernel_basis, Matrix, solve_raw
from .gralg.algebra import (
    GradedAlgebra,
    Vector,
    build_algebra,
    degree_zero_part,
    field_algebra,
    hilbert_series,
    ideal_span,
    kron,
    multiply_series,
    quotient_algebra,
    tensor_product,
)
from .gralg.decompose import decompose_local
from .gralg.morphism import Morphism, MorphismError, extend_on_generators
from .gralg.presentation import Poly, Presentation, PresentationError, TensorPoly, check_comul


class HopfAxiomError(VerificationError):
    """Coalgebra data that fails one or more bialgebra axioms."""


class AntipodeError(VerificationError):
    """The antipode equations have no solution, or more than one."""


class PreconditionError(ValueError):
    """Input outside the hypotheses an operation needs."""


@dataclass
class HopfAlgebra:
    """A graded algebra with comultiplication, counit and (optionally) antipode.

    ``square`` is the Koszul-signed tensor square that ``comul`` lands in;
    for truncated algebras it is truncated at the same degree.
    """

    algebra: GradedAlgebra
    square: GradedAlgebra
    comul: Morphism
    counit: Morphism
    antipode: Morphism | None = None
    name: str = ""
    _terms: list | None = field(default=None, repr=False)

    @property
    def spec(self) -> FieldSpec:
        return self.algebra.spec

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def truncation(self) -> int | None:
        return self.algebra.truncation

    def counit_values(self) -> list[Raw]:
        return [col[0] for col in self.counit.columns]

    def eps(self, v: Sequence[Raw]) -> Raw:
        return self.counit.apply(v)[0]

    def delta(self, v: Sequence[Raw]) -> Vector:
        return self.comul.apply(v)

    def comul_terms(self, i: int) -> list[tuple[int, int, Raw]]:
        """Nonzero ``(k, l, c)`` with ``Δ(b_i) = Σ c b_k ⊗ b_l``."""
        if self._terms is None:
            pairs = self.square.pairs
            self._terms = [
                [(pairs[t][0], pairs[t][1], c) for t, c in enumerate(col) if c != 0] for col in self.comul.columns
            ]
        return self._terms[i]

    def with_antipode(self, s: Morphism | None) -> "HopfAlgebra":
        return HopfAlgebra(self.algebra, self.square, self.comul, self.counit, s, self.name)

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.name or self.algebra.name}, dim={self.dim}, over {self.spec})"


# -- construction -------------------------------------------------------------


def _tensor_vector(a: GradedAlgebra, square: GradedAlgebra, poly: TensorPoly) -> Vector:
    return square.lincomb((c, kron(square, a.monomial_vector(l), a.monomial_vector(r))) for (l, r), c in poly)


def attach_coalgebra(
    p: Presentation,
    comul_on_gens: Mapping[str, TensorPoly] | None = None,
    counit_on_gens: Mapping[str, Raw] | None = None,
) -> HopfAlgebra:
    """Extend Δ and ε multiplicatively from the generators and check the bialgebra axioms.

    Raises :class:`HopfAxiomError` listing every failed axiom.
    """
    comul_on_gens = dict(p.comul) if comul_on_gens is None else dict(comul_on_gens)
    counit_on_gens = dict(p.counit) if counit_on_gens is None else dict(counit_on_gens)
    for name, poly in comul_on_gens.items():
        check_comul(p, name, poly)
    a = build_algebra(p)
    square = tensor_product(a, a)
    k = field_algebra(p.field)
    comul_imgs = []
    counit_imgs = []
    for g in p.generators:
        if g.name not in comul_on_gens:
            raise PresentationError(f"no comul given for generator {g.name}")
        comul_imgs.append(_tensor_vector(a, square, comul_on_gens[g.name]))
        if g.name in counit_on_gens:
            c = counit_on_gens[g.name]
            if g.degree != 0 and c != 0:
                raise PresentationError(f"counit of {g.name} must vanish: it has degree {g.degree}")
        elif g.degree == 0:
            raise PresentationError(f"no counit given for degree-0 generator {g.name}")
        else:
            c = 0
        counit_imgs.append((c,))
    comul = extend_on_generators(a, square, comul_imgs)
    counit = extend_on_generators(a, k, counit_imgs)
    h = HopfAlgebra(a, square, comul, counit, None, p.name)
    report = Report()
    report.extend(_relation_checks(h, comul_imgs, counit_imgs))
    report.extend(bialgebra_checks(h))
    if not report.passed:
        names = ", ".join(f"{c.name} ({c.witness})" for c in report.failures)
        raise HopfAxiomError(f"bialgebra axioms fail: {names}", report)
    return HopfAlgebra(a, square, replace(comul, certified=True), replace(counit, certified=True), None, p.name)


def hopf_from_presentation(p: Presentation) -> HopfAlgebra:
    """Bialgebra from a presentation, with its antipode attached (unverified) when given."""
    h = attach_coalgebra(p)
    if p.antipode:
        h = h.with_antipode(antipode_from_generators(h, dict(p.antipode)))
    return h


def antipode_from_generators(h: HopfAlgebra, images: Mapping[str, Poly]) -> Morphism:
    a = h.algebra
    p = a.presentation
    vecs = []
    for g in p.generators:
        if g.name not in images:
            raise PresentationError(f"no antipode given for generator {g.name}")
        vecs.append(a.evaluate_poly(images[g.name]))
    return extend_on_generators(a, a, vecs)


def _relation_checks(h: HopfAlgebra, comul_imgs, counit_imgs) -> list[Check]:
    a, sq = h.algebra, h.square
    k = h.counit.target
    out = []
    bad_d, bad_e = [], []
    for g, d, e in zip(a.presentation.generators, comul_imgs, counit_imgs):
        rel = a.presentation.relation_for(g.name)
        if rel is None:
            continue
        if sq.power(d, rel.exponent) != sq.lincomb((c, sq.power(d, j)) for j, c in rel.rhs):
            bad_d.append(f"{g.name}^{rel.exponent}")
        if k.power(e, rel.exponent) != k.lincomb((c, k.power(e, j)) for j, c in rel.rhs):
            bad_e.append(f"{g.name}^{rel.exponent}")
    out.append(Check("comul-respects-relations", not bad_d, ", ".join(bad_d) or None))
    out.append(Check("counit-respects-relations", not bad_e, ", ".join(bad_e) or None))
    return out


def _algebra_map_check(name: str, m: Morphism) -> Check:
    w = m.degree_witness()
    if w is not None:
        return Check(name, False, f"degree of image of {m.source.labels[w]}")
    if not m.preserves_unit():
        return Check(name, False, "unit")
    w2 = m.multiplicativity_witness()
    if w2 is not None:
        i, j = w2
        return Check(name, False, f"{m.source.labels[i]} * {m.source.labels[j]}")
    return Check(name, True)


def bialgebra_checks(h: HopfAlgebra) -> list[Check]:
    a = h.algebra
    out = [_algebra_map_check("comul-algebra-map", h.comul), _algebra_map_check("counit-algebra-map", h.counit)]
    w = coassociativity_witness(h)
    out.append(Check("coassociativity", w is None, None if w is None else a.labels[w]))
    left, right = counit_law_witnesses(h)
    out.append(Check("counit-left", left is None, None if left is None else a.labels[left]))
    out.append(Check("counit-right", right is None, None if right is None else a.labels[right]))
    return out


def coassociativity_witness(h: HopfAlgebra) -> int | None:
    F = h.field
    for i in range(h.dim):
        left: dict[tuple[int, int, int], Raw] = {}
        right: dict[tuple[int, int, int], Raw] = {}
        for k, l, c in h.comul_terms(i):
            for k2, l2, d in h.comul_terms(k):
                key = (k2, l2, l)
                left[key] = F.add(left.get(key, 0), F.mul(c, d))
            for k2, l2, d in h.comul_terms(l):
                key = (k, k2, l2)
                right[key] = F.add(right.get(key, 0), F.mul(c, d))
        if {x: y for x, y in left.items() if y != 0} != {x: y for x, y in right.items() if y != 0}:
            return i
    return None


def counit_law_witnesses(h: HopfAlgebra) -> tuple[int | None, int | None]:
    a = h.algebra
    eps = h.counit_values()
    left_w = right_w = None
    for i in range(h.dim):
        terms = h.comul_terms(i)
        left = a.lincomb((a.field.mul(c, eps[k]), a.basis_vector(l)) for k, l, c in terms)
        right = a.lincomb((a.field.mul(c, eps[l]), a.basis_vector(k)) for k, l, c in terms)
        b = a.basis_vector(i)
        if left != b and left_w is None:
            left_w = i
        if right != b and right_w is None:
            right_w = i
    return left_w, right_w


# -- convolution and the antipode --------------------------------------------


def convolution(f: Morphism, g: Morphism, h: HopfAlgebra) -> Morphism:
    """``m_R ∘ (f ⊗ g) ∘ Δ``.

    ``(f ⊗ g)(a ⊗ b) = (-1)^(|g||a|) f(a) g(b)``; the maps here preserve
    degree, so ``|g| = 0`` and no sign appears.
    """
    if f.target is not g.target:
        raise MorphismError("convolution of maps with different targets")
    if f.source is not h.algebra or g.source is not h.algebra:
        raise MorphismError("convolution of maps not defined on the Hopf algebra")
    r = f.target
    cols = []
    for i in range(h.dim):
        acc = r.zero()
        for k, l, c in h.comul_terms(i):
            acc = r.add(acc, r.scale(c, r.mul(f.columns[k], g.columns[l])))
        cols.append(acc)
    certified = f.certified and g.certified and r.is_graded_commutative()
    return Morphism(h.algebra, r, tuple(cols), certified)


def unit_counit(h: HopfAlgebra, r: GradedAlgebra | None = None) -> Morphism:
    """The map ``η_R ∘ ε``: the identity for convolution."""
    r = h.algebra if r is None else r
    eps = h.counit_values()
    return Morphism(h.algebra, r, tuple(r.scale(e, r.unit) for e in eps), True)


def antipode_identity_witnesses(h: HopfAlgebra, s: Morphism) -> tuple[int | None, int | None]:
    """First basis elements where ``m(S⊗id)Δ`` resp. ``m(id⊗S)Δ`` differ from ``ηε``."""
    a = h.algebra
    eps = h.counit_values()
    lw = rw = None
    for i in range(h.dim):
        target = a.scale(eps[i], a.unit)
        left = a.zero()
        right = a.zero()
        for k, l, c in h.comul_terms(i):
            left = a.add(left, a.scale(c, a.mul(s.columns[k], a.basis_vector(l))))
            right = a.add(right, a.scale(c, a.mul(a.basis_vector(k), s.columns[l])))
        if left != target and lw is None:
            lw = i
        if right != target and rw is None:
            rw = i
    return lw, rw


def synthesize_antipode(h: HopfAlgebra) -> HopfAlgebra:
    """Solve ``m(S⊗id)Δ = ηε`` for a degree-preserving ``S``, one degree at a time.

    In degree d the unknowns are the entries of ``S`` on ``A_d``; the terms of
    ``Δ(b)`` whose left factor has lower degree only involve values already
    solved. Each block must have full rank; the opposite identity is then
    checked separately.
    """
    a = h.algebra
    F = a.field
    eps = h.counit_values()
    s_cols: list[Vector | None] = [None] * a.dim
    for d in sorted(set(a.degrees)):
        idx = a.indices_of_degree(d)
        nd = len(idx)
        pos = {j: t for t, j in enumerate(idx)}
        nunk = nd * nd
        rows: list[list[Raw]] = []
        rhs: list[list[Raw]] = []
        prod = {}
        for i in idx:
            known = a.scale(eps[i], a.unit)
            coeff = [[0] * nunk for _ in range(nd)]
            for k, l, c in h.comul_terms(i):
                if a.degrees[k] < d:
                    known = a.sub(known, a.scale(c, a.mul(s_cols[k], a.basis_vector(l))))
                    continue
                bk = pos[k]
                for j in idx:
                    key = (j, l)
                    if key not in prod:
                        prod[key] = a.mul(a.basis_vector(j), a.basis_vector(l))
                    v = prod[key]
                    u = pos[j] * nd + bk
                    for r_local, r in enumerate(idx):
                        if v[r] != 0:
                            coeff[r_local][u] = F.add(coeff[r_local][u], F.mul(c, v[r]))
            if any(known[r] != 0 for r in range(a.dim) if a.degrees[r] != d):
                raise AntipodeError(f"antipode equation for {a.labels[i]} is inconsistent")
            for r_local, r in enumerate(idx):
                rows.append(coeff[r_local])
                rhs.append([known[r]])
        x, rank = solve_raw(F, rows, rhs, nunk)
        if x is None:
            raise AntipodeError(f"no antipode: the degree-{d} equations are inconsistent")
        if rank < nunk:
            raise AntipodeError(f"antipode not unique in degree {d} (rank {rank} < {nunk})")
        for bk, k in enumerate(idx):
            col = [0] * a.dim
            for t, j in enumerate(idx):
                col[j] = x[t * nd + bk][0]
            s_cols[k] = tuple(col)
    s = Morphism(a, a, tuple(s_cols))
    lw, rw = antipode_identity_witnesses(h, s)
    if lw is not None:
        raise AntipodeError(f"solved antipode fails m(S⊗id)Δ = ηε at {a.labels[lw]}")
    if rw is not None:
        raise AntipodeError(f"solved antipode fails m(id⊗S)Δ = ηε at {a.labels[rw]}")
    return h.with_antipode(s)


def ensure_antipode(h: HopfAlgebra) -> HopfAlgebra:
    return h if h.antipode is not None else synthesize_antipode(h)


def verify_hopf(h: HopfAlgebra) -> Report:
    """Re-check every Hopf axiom plus the standard properties of the antipode."""
    a = h.algebra
    report = Report()
    w = a.associativity_witness()
    report.add("associative", w is None, w and "*".join(a.labels[i] for i in w))
    w = a.graded_commutativity_witness()
    report.add("graded-commutative", w is None, w and f"{a.labels[w[0]]}, {a.labels[w[1]]}")
    report.extend(bialgebra_checks(h))
    s = h.antipode
    if s is None:
        report.add("antipode-present", False, "no antipode attached")
        return report
    lw, rw = antipode_identity_witnesses(h, s)
    report.add("antipode-left", lw is None, None if lw is None else a.labels[lw])
    report.add("antipode-right", rw is None, None if rw is None else a.labels[rw])
    dw = s.degree_witness()
    report.add("antipode-degree", dw is None, None if dw is None else a.labels[dw])
    c = _algebra_map_check("antipode-algebra-map", s)
    report.checks.append(c)
    ss = s.compose(s)
    bad = next((i for i, col in enumerate(ss.columns) if col != a.basis_vector(i)), None)
    report.add("antipode-involution", bad is None, None if bad is None else a.labels[bad])
    if a.truncation is not None:
        report.notes.append(f"checks hold up to degree {a.truncation} (truncated algebra)")
    return report


def is_cocommutative(h: HopfAlgebra) -> bool:
    """``τ ∘ Δ = Δ`` with the graded twist ``τ(a⊗b) = (-1)^(|a||b|) b⊗a``."""
    a, sq = h.algebra, h.square
    F = a.field
    for i in range(h.dim):
        twisted = [0] * sq.dim
        for k, l, c in h.comul_terms(i):
            sign = F.neg(1) if (a.degrees[k] * a.degrees[l]) % 2 else 1
            t = sq.pair_index[(l, k)]
            twisted[t] = F.add(twisted[t], F.mul(sign, c))
        if tuple(twisted) != h.comul.columns[i]:
            return False
    return True


# -- graded dual ----------------------------------------------------------------


def _dual_comul_tensors(h: HopfAlgebra, dual_alg: GradedAlgebra, dual_sq: GradedAlgebra) -> list[Vector]:
    a = h.algebra
    F = a.field
    cols = [[0] * dual_sq.dim for _ in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            sign = F.neg(1) if (a.degrees[i] * a.degrees[j]) % 2 else 1
            for t, c in a.table[i][j]:
                u = dual_sq.pair_index.get((i, j))
                if u is not None:
                    cols[t][u] = F.add(cols[t][u], F.mul(sign, c))
    return [tuple(c) for c in cols]


def graded_dual(h: HopfAlgebra) -> HopfAlgebra:
    """The graded dual ``A*`` on the dual basis, with ``(A*)_n = (A_n)*``.

    The pairing of tensors is ``⟨f⊗g, a⊗b⟩ = (-1)^(|g||a|) f(a) g(b)``, which
    gives ``f_i f_j = (-1)^(|b_i||b_j|) Σ_t Δ-coefficient(b_t; b_i⊗b_j) f_t`` and
    makes the double dual reproduce the original structure constants.
    """
    a = h.algebra
    if a.truncation is not None:
        raise PreconditionError("graded dual needs a finite-dimensional algebra, not a truncation")
    F = a.field
    n = a.dim
    table: list[list[dict[int, Raw]]] = [[{} for _ in range(n)] for _ in range(n)]
    for t in range(n):
        for k, l, c in h.comul_terms(t):
            sign = F.neg(1) if (a.degrees[k] * a.degrees[l]) % 2 else 1
            cell = table[k][l]
            cell[t] = F.add(cell.get(t, 0), F.mul(sign, c))
    tab = [[tuple(sorted((t, c) for t, c in cell.items() if c != 0)) for cell in row] for row in table]
    eps = h.counit_values()
    dual_alg = GradedAlgebra(
        a.spec, a.degrees, tab, eps, [f"⟨{lab}⟩" for lab in a.labels], name=f"{a.name}*"
    )
    dual_sq = tensor_product(dual_alg, dual_alg, truncation=None)
    comul = Morphism(dual_alg, dual_sq, tuple(_dual_comul_tensors(h, dual_alg, dual_sq)))
    k = field_algebra(a.spec)
    counit = Morphism(dual_alg, k, tuple((a.unit[i],) for i in range(n)))
    anti = None
    if h.antipode is not None:
        s = h.antipode
        anti = Morphism(dual_alg, dual_alg, tuple(tuple(s.columns[j][i] for j in range(n)) for i in range(n)))
    return HopfAlgebra(dual_alg, dual_sq, comul, counit, anti, f"{h.name}*")


def structure_constants_equal(x: HopfAlgebra, y: HopfAlgebra) -> bool:
    """Same structure constants under the identification of basis indices."""
    if x.dim != y.dim or x.algebra.degrees != y.algebra.degrees:
        return False
    if [[dict(c) for c in r] for r in x.algebra.table] != [[dict(c) for c in r] for r in y.algebra.table]:
        return False
    if x.algebra.unit != y.algebra.unit or x.counit_values() != y.counit_values():
        return False
    for i in range(x.dim):
        if sorted(x.comul_terms(i)) != sorted(y.comul_terms(i)):
            return False
    if (x.antipode is None) != (y.antipode is None):
        return False
    return x.antipode is None or x.antipode.columns == y.antipode.columns


# -- subobjects and quotients ---------------------------------------------------


def quotient_hopf(h: HopfAlgebra, ideal: Subspace, name: str = "") -> tuple[HopfAlgebra, Morphism, Report]:
    """Induced Hopf structure on ``A / ideal`` for a Hopf ideal.

    The report records whether Δ, ε and S are well defined on the quotient,
    with a witness from the ideal otherwise.
    """
    a = h.algebra
    qd = quotient_algebra(a, ideal, name=name or f"{a.name}/I")
    q = qd.algebra
    proj = Morphism(a, q, tuple(qd.projection_columns), True)
    qsq = tensor_product(q, q)
    report = Report()

    def push(v: Sequence[Raw]) -> Vector:
        acc = [0] * qsq.dim
        F = a.field
        for t, c in enumerate(v):
            if c == 0:
                continue
            k, l = h.square.pairs[t]
            pk, pl = proj.columns[k], proj.columns[l]
            for x, cx in enumerate(pk):
                if cx == 0:
                    continue
                for y, cy in enumerate(pl):
                    if cy == 0:
                        continue
                    u = qsq.pair_index.get((x, y))
                    if u is not None:
                        acc[u] = F.add(acc[u], F.mul(c, F.mul(cx, cy)))
        return tuple(acc)

    bad_d = next((v for v in ideal.basis if any(push(h.delta(v)))), None)
    report.add("comul-well-defined", bad_d is None, bad_d and a.format(bad_d))
    bad_e = next((v for v in ideal.basis if h.eps(v) != 0), None)
    report.add("counit-well-defined", bad_e is None, bad_e and a.format(bad_e))
    comul_cols = tuple(push(h.delta(qd.lift(q.basis_vector(i)))) for i in range(q.dim))
    counit_cols = tuple((h.eps(qd.lift(q.basis_vector(i))),) for i in range(q.dim))
    anti = None
    if h.antipode is not None:
        bad_s = next((v for v in ideal.basis if any(proj.apply(h.antipode.apply(v)))), None)
        report.add("antipode-well-defined", bad_s is None, bad_s and a.format(bad_s))
        anti = Morphism(q, q, tuple(proj.apply(h.antipode.apply(qd.lift(q.basis_vector(i)))) for i in range(q.dim)))
    k = h.counit.target
    out = HopfAlgebra(q, qsq, Morphism(q, qsq, comul_cols), Morphism(q, k, counit_cols), anti, q.name)
    return out, proj, report


def sub_hopf(h: HopfAlgebra, sub, name: str = "") -> tuple[HopfAlgebra, Morphism, Report]:
    """Hopf structure restricted to a subalgebra (``SubalgebraData``), with closure checks."""
    a = h.algebra
    b = sub.algebra
    piv = sub.space.pivots
    bsq = tensor_product(b, b)
    report = Report()
    comul_cols = []
    closed = True
    witness = None
    for idx, u in enumerate(sub.space.basis):
        d = h.delta(u)
        w = [0] * bsq.dim
        for (c1, c2), t in bsq.pair_index.items():
            pos = h.square.pair_index.get((piv[c1], piv[c2]))
            if pos is not None:
                w[t] = d[pos]
        rebuilt = h.square.lincomb((w[t], kron(h.square, sub.space.basis[c1], sub.space.basis[c2]))
                                   for (c1, c2), t in bsq.pair_index.items() if w[t] != 0)
        if rebuilt != d and closed:
            closed = False
            witness = b.labels[idx]
        comul_cols.append(tuple(w))
    report.add("comul-closed", closed, witness)
    counit_cols = tuple((h.eps(u),) for u in sub.space.basis)
    anti = None
    if h.antipode is not None:
        cols = []
        bad = None
        for idx, u in enumerate(sub.space.basis):
            su = h.antipode.apply(u)
            if not sub.space.contains(su):
                bad = bad or b.labels[idx]
            cols.append(sub.coords(su))
        report.add("antipode-closed", bad is None, bad)
        anti = Morphism(b, b, tuple(cols))
    incl = Morphism(b, a, tuple(sub.space.basis), True)
    k = h.counit.target
    out = HopfAlgebra(b, bsq, Morphism(b, bsq, tuple(comul_cols)), Morphism(b, k, counit_cols), anti, name or b.name)
    return out, incl, report


# -- connectivization and freeness --------------------------------------------


class Connectivization(NamedTuple):
    kappa: HopfAlgebra
    projection: Morphism
    cotensor_check: bool
    report: Report
    cotensor_space: Subspace | None = None


def augmentation_degree0(h: HopfAlgebra) -> list[Vector]:
    """Basis of ``ker ε ∩ A₀`` (as vectors of A)."""
    a = h.algebra
    eps = h.counit_values()
    idx = a.indices_of_degree(0)
    rows = [[eps[i] for i in idx]]
    out = []
    for v in kernel_basis(Matrix(a.spec, tuple(tuple(r) for r in rows), len(idx))):
        vec = [0] * a.dim
        for t, i in enumerate(idx):
            vec[i] = v.rows[t][0]
        out.append(tuple(vec))
    return out


def cotensor(h: HopfAlgebra, kappa: HopfAlgebra, projection: Morphism) -> Subspace:
    """``{a : (id⊗π)Δ(a) = a⊗1}`` computed as a kernel."""
    a = h.algebra
    q = kappa.algebra
    t = tensor_product(a, q)
    cols = []
    for i in range(a.dim):
        acc = [0] * t.dim
        F = a.field
        for k, l, c in h.comul_terms(i):
            for y, cy in enumerate(projection.columns[l]):
                if cy != 0:
                    u = t.pair_index.get((k, y))
                    if u is not None:
                        acc[u] = F.add(acc[u], F.mul(c, cy))
        acc = t.sub(acc, kron(t, a.basis_vector(i), q.unit))
        cols.append(acc)
    mat = Matrix(a.spec, tuple(tuple(col[r] for col in cols) for r in range(t.dim)), a.dim)
    return Subspace(a.field, a.dim, [v.column_vectors()[0] for v in kernel_basis(mat)])


def connectivize(h: HopfAlgebra) -> Connectivization:
    """``κ(A) = A / (ker ε ∩ A₀)A`` with its induced Hopf structure.

    The cotensor check compares ``{a : (id⊗π)Δ(a) = a⊗1}`` with ``A₀``.
    """
    a = h.algebra
    ideal = ideal_span(a, augmentation_degree0(h))
    kappa, proj, report = quotient_hopf(h, ideal, name=f"kappa({a.name})")
    report.add("kappa-degree0-one-dimensional", len(kappa.algebra.indices_of_degree(0)) == 1)
    cot = cotensor(h, kappa, proj)
    a0 = Subspace(a.field, a.dim, [a.basis_vector(i) for i in a.indices_of_degree(0)])
    ok = cot == a0
    report.add("cotensor-equals-degree0", ok, None if ok else f"cotensor has dimension {cot.dim}, A0 has {a0.dim}")
    return Connectivization(kappa, proj, ok, report, cot)


def _require_local_degree0(h: HopfAlgebra) -> None:
    a0 = degree_zero_part(h.algebra).algebra
    if decompose_local(a0).component_count != 1:
        raise PreconditionError("degree-0 part is not local")


def free_basis(h: HopfAlgebra) -> list[Vector]:
    """Homogeneous lifts of a basis of ``κ(A)`` freely generating A over ``A₀``."""
    _require_local_degree0(h)
    a = h.algebra
    ideal = ideal_span(a, augmentation_degree0(h))
    lifts = [a.basis_vector(i) for i in quotient_algebra(a, ideal).section]
    zero = a.indices_of_degree(0)
    cols = [a.mul(a.basis_vector(j), s) for s in lifts for j in zero]
    m = Matrix(a.spec, tuple(tuple(c[r] for c in cols) for r in range(a.dim)), len(cols))
    if len(cols) != a.dim or m.rank() != a.dim:
        raise VerificationError("lifted basis of κ(A) is not a free A0-basis")
    return lifts


def hilbert_factorization(h: HopfAlgebra) -> tuple[bool, list[int], list[int]]:
    """Whether ``Hilbert(A) = Hilbert(κ(A)) · Hilbert(A₀)``; returns both sides."""
    a = h.algebra
    kappa = connectivize(h).kappa.algebra
    h0 = [len(a.indices_of_degree(0))]
    lhs = hilbert_series(a)
    rhs = multiply_series(hilbert_series(kappa), h0, a.truncation)
    return lhs == rhs, lhs, rhs


# -- variety classification -------------------------------------------------------


@dataclass
class VarietyShape:
    """Degrees and heights of a truncated-polynomial ⊗ exterior presentation.

    ``polynomial_generators`` holds ``(degree, height, capped)``; ``capped``
    marks heights cut off by the truncation degree.
    """

    polynomial_generators: list[tuple[int, int, bool]]
    exterior_generators: list[int]
    generators: list[Vector]
    labels: list[str]
    truncation: int | None = None

    def hilbert(self) -> list[int]:
        series = [1]
        for d, height, _ in self.polynomial_generators:
            s = [0] * (d * (height - 1) + 1)
            for e in range(height):
                s[d * e] += 1
            series = multiply_series(series, s, self.truncation)
        for d in self.exterior_generators:
            s = [0] * (d + 1)
            s[0] += 1
            s[d] += 1
            series = multiply_series(series, s, self.truncation)
        return series


def _nilpotency(a: GradedAlgebra, x: Vector) -> int:
    n, y = 1, x
    while any(y):
        y = a.mul(y, x)
        n += 1
        if n > a.dim + 1:
            raise PreconditionError("generator is not nilpotent")
    return n


def classify_variety(h: HopfAlgebra) -> VarietyShape:
    """Read off the shape of a gr-group variety over a finite field.

    Generators of ``I = ker ε`` are chosen greedily degree by degree modulo
    ``I² +`` those already chosen, preferring elements of larger height.
    Heights are nilpotency indices. The result is verified against the
    Hilbert series and the shape constraints for odd characteristic.
    """
    a = h.algebra
    F = a.field
    p = F.p
    if p == 0:
        raise PreconditionError("variety classification needs positive characteristic")
    _require_local_degree0(h)
    aug = augmentation_degree0(h) + [a.basis_vector(i) for i in range(a.dim) if a.degrees[i] > 0]
    aug_space = Subspace(F, a.dim, aug)
    i2 = Subspace(F, a.dim, [a.mul(u, v) for u in aug_space.basis for v in aug_space.basis])
    chosen: list[Vector] = []
    poly: list[tuple[int, int, bool]] = []
    ext: list[int] = []
    top = a.truncation
    for d in sorted(set(a.degrees)):
        if d == 0:
            cands = [v for v in aug_space.basis if a.degree_of(v) == 0]
        else:
            cands = [a.basis_vector(i) for i in a.indices_of_degree(d)]
        heights = {c: _nilpotency(a, c) for c in cands}
        cands.sort(key=lambda c: -heights[c])
        for c in cands:
            span = Subspace(F, a.dim, list(i2.basis) + chosen)
            if span.contains(c):
                continue
            chosen.append(c)
            ht = heights[c]
            if p > 2 and d % 2 == 1:
                ext.append(d)
            else:
                capped = top is not None and ht * d > top
                poly.append((d, ht, capped))
    shape = VarietyShape(poly, ext, chosen, [a.format(v) for v in chosen], top)
    if shape.hilbert() != hilbert_series(a):
        raise VerificationError(
            f"Hilbert series of the extracted shape {shape.hilbert()} differs from the algebra's {hilbert_series(a)}"
        )
    for d, ht, capped in poly:
        if capped:
            continue
        q = 1
        while q < ht:
            q *= p
        if q != ht:
            raise VerificationError(f"generator of degree {d} has height {ht}, not a power of {p}")
        if p > 2 and d % 2 == 1:
            raise VerificationError(f"truncated generator of odd degree {d} in characteristic {p}")
    return shape


__all__ = [
    "AntipodeError",
    "Connectivization",
    "HopfAlgebra",
    "HopfAxiomError",
    "PreconditionError",
    "VarietyShape",
    "antipode_from_generators",
    "antipode_identity_witnesses",
    "attach_coalgebra",
    "bialgebra_checks",
    "classify_variety",
    "coassociativity_witness",
    "connectivize",
    "convolution",
    "cotensor",
    "ensure_antipode",
    "free_basis",
    "graded_dual",
    "hilbert_factorization",
    "hopf_from_presentation",
    "is_cocommutative",
    "quotient_hopf",
    "structure_constants_equal",
    "sub_hopf",
    "synthesize_antipode",
    "unit_counit",
    "verify_hopf",
]
