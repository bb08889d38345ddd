"""Checks run on every randomly drawn presentation; shared by the property tests and the acceptance run."""

from __future__ import annotations

import tempfile
from pathlib import Path

from grhopf.cli.main import CommandRequest, run_one
from grhopf.cli.parser import print_presentation
from grhopf.gralg.algebra import build_algebra
from grhopf.gralg.decompose import decompose_local
from grhopf.hopf import graded_dual, hopf_from_presentation, structure_constants_equal

from oracles import basis, mul


def _times_basis(a, v, k, left: bool):
    """``v * b_k`` (or ``b_k * v``) read straight off the multiplication table."""
    F = a.field
    out = {}
    for l, x in enumerate(v):
        if x == 0:
            continue
        for t, c in (a.table[k][l] if left else a.table[l][k]):
            out[t] = F.add(out.get(t, 0), F.mul(x, c))
    return {t: c for t, c in out.items() if c != 0}


def associative_on_all_triples(a) -> bool:
    e = [basis(a, i) for i in range(a.dim)]
    prods = [[mul(a, x, y) for y in e] for x in e]
    return all(_times_basis(a, prods[i][j], k, False) == _times_basis(a, prods[j][k], i, True)
               for i in range(a.dim) for j in range(a.dim) for k in range(a.dim))


def graded_commutative_on_all_pairs(a) -> bool:
    F = a.field
    e = [basis(a, i) for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(i, a.dim):
            sign = F.neg(1) if a.degrees[i] * a.degrees[j] % 2 else 1
            if mul(a, e[i], e[j]) != tuple(F.mul(sign, x) for x in mul(a, e[j], e[i])):
                return False
            if i == j and a.degrees[i] % 2 and F.p != 2 and any(mul(a, e[i], e[i])):
                return False
    return True


def decomposition_properties(a, counit=None) -> dict[str, bool]:
    dec = decompose_local(a, counit)
    deg0 = set(a.indices_of_degree(0))
    idem = dec.all_idempotents()
    return {
        "dims-sum": sum(c.dim for c in dec.components) == a.dim,
        "idempotents-degree-0": all(all(v == 0 for k, v in enumerate(e) if k not in deg0) for e in idem),
        "idempotents-idempotent": all(a.mul(e, e) == e for e in idem),
        "primitive-count": len(idem) == 2 ** len(dec.components),
        "gr-local-implies-connected": (not dec.is_gr_local) or dec.spectrum_connected,
    }


def deterministic_report(p, command: str) -> bool:
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "drawn.ghopf"
        path.write_text(print_presentation(p))
        req = CommandRequest(command, [str(path)])
        first = run_one(req, str(path)).to_json()
        second = run_one(req, str(path)).to_json()
    return first == second


def check_presentation(p) -> dict[str, bool]:
    """Every property for one drawn presentation, keyed by property name."""
    is_hopf = bool(p.comul)
    a = build_algebra(p)
    out = {
        "associative": associative_on_all_triples(a),
        "graded-commutative": graded_commutative_on_all_pairs(a),
    }
    if is_hopf:
        h = hopf_from_presentation(p)
        out.update(decomposition_properties(a, h.counit_values()))
        if p.truncation is None:
            out["double-dual"] = structure_constants_equal(graded_dual(graded_dual(h)), h)
        out["deterministic-report"] = deterministic_report(p, "verify")
    else:
        out.update(decomposition_properties(a))
        out["deterministic-report"] = deterministic_report(p, "decompose")
    return out
