"""Command-line dispatcher: ``grhopf <command> FILE... [options]``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from ..checks import Report, VerificationError
from ..exactfield import FieldError
from ..gralg.algebra import AlgebraError, GradedAlgebra, build_algebra, hilbert_series
from ..gralg.decompose import decompose_local, is_separable
from ..gralg.morphism import MorphismError
from ..gralg.presentation import Presentation, PresentationError
from ..hopf import (
    HopfAlgebra,
    PreconditionError,
    classify_variety,
    connectivize,
    free_basis,
    graded_dual,
    hilbert_factorization,
    hopf_from_presentation,
    is_cocommutative,
    structure_constants_equal,
    synthesize_antipode,
    verify_hopf,
)
from ..points import DEFAULT_BUDGET, BudgetExceeded, enumerate_points
from ..scheme import classify_components, component0, four_factor, pi0, semidirect_check
from .parser import ParseError, load_presentation
from .report import EXIT_BUDGET, EXIT_FAILED, EXIT_INPUT, Record

COMMANDS = (
    "verify",
    "antipode",
    "connectivize",
    "decompose",
    "pi0",
    "component0",
    "points",
    "dual",
    "four-factor",
    "classify",
    "hilbert",
)


@dataclass
class CommandRequest:
    command: str
    inputs: list[str]
    ring: str | None = None
    truncate: int | None = None
    json: bool = False
    budget: int = DEFAULT_BUDGET
    fixtures_dir: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")


def default_fixtures_dir() -> Path:
    return Path(str(resources.files("grhopf") / "fixtures"))


def resolve_input(name: str, fixtures_dir: str | None = None) -> Path:
    """A path as given, else a bundled fixture by file name or stem."""
    p = Path(name)
    if p.is_file():
        return p
    base = Path(fixtures_dir) if fixtures_dir else default_fixtures_dir()
    for cand in (base / p.name, base / f"{p.name}.ghopf", base / "rings" / p.name, base / "rings" / f"{p.name}.ghopf"):
        if cand.is_file():
            return cand
    raise FileNotFoundError(f"no such presentation file: {name}")


def _labels(a: GradedAlgebra) -> list[str]:
    return list(a.labels)


def _summary(h: HopfAlgebra) -> dict:
    return {
        "name": h.name or h.algebra.name,
        "field": str(h.spec),
        "dim": h.dim,
        "hilbert": hilbert_series(h.algebra),
        "basis": _labels(h.algebra),
    }


def _with_antipode(h: HopfAlgebra, rec: Record) -> HopfAlgebra:
    if h.antipode is None:
        rec.notes.append("antipode synthesized (none given)")
        return synthesize_antipode(h)
    return h


def _generator_formulas(h: HopfAlgebra) -> dict[str, str]:
    a = h.algebra
    out = {}
    for name, v in zip(a.presentation.generator_names, a.generator_vectors()):
        out[name] = a.format(h.antipode.apply(v))
    return out


# -- commands --------------------------------------------------------------------


def cmd_verify(p: Presentation, req: CommandRequest, rec: Record) -> None:
    h = _with_antipode(hopf_from_presentation(p), rec)
    rec.result = _summary(h)
    rec.add_report(verify_hopf(h))


def cmd_antipode(p: Presentation, req: CommandRequest, rec: Record) -> None:
    given = hopf_from_presentation(p)
    h = synthesize_antipode(given.with_antipode(None))
    formulas = _generator_formulas(h)
    rec.result = {
        "antipode": formulas,
        "formulas": [f"S({g}) = {v}" for g, v in formulas.items()],
        "matrix": [h.algebra.format(col) for col in h.antipode.columns],
    }
    report = Report()
    if given.antipode is not None:
        report.add("matches-given", given.antipode.columns == h.antipode.columns)
    s = h.antipode
    report.add("involution", s.compose(s).is_identity())
    rec.add_report(report)


def cmd_connectivize(p: Presentation, req: CommandRequest, rec: Record) -> None:
    h = _with_antipode(hopf_from_presentation(p), rec)
    c = connectivize(h)
    rec.result = {
        "kappa": _summary(c.kappa),
        "degree0_dim": len(h.algebra.indices_of_degree(0)),
        "cotensor_dim": c.cotensor_space.dim,
        "cotensor_is_degree0": c.cotensor_check,
    }
    rec.add_report(c.report)


def cmd_decompose(p: Presentation, req: CommandRequest, rec: Record) -> None:
    # a bare algebra (no coalgebra lines) decomposes just as well
    if p.comul:
        h = hopf_from_presentation(p)
        a, counit = h.algebra, h.counit_values()
    else:
        a, counit = build_algebra(p), None
    dec = decompose_local(a, counit)
    fmt = lambda v: a.format(v, factor=True)  # noqa: E731
    rec.result = {
        "component_count": dec.component_count,
        "idempotents": [fmt(e) for e in dec.all_idempotents()],
        "components": [
            {
                "idempotent": fmt(c.idempotent),
                "dim": c.dim,
                "residue_field": str(c.residue),
                "maximal_ideal_dim": c.maximal_ideal.dim,
                "counit_component": i == dec.counit_component,
            }
            for i, c in enumerate(dec.components)
        ],
        "nilradical0_dim": dec.nilradical0.dim,
        "gr_local": dec.is_gr_local,
        "spectrum_connected": dec.spectrum_connected,
        "separable": is_separable(a),
    }


def cmd_pi0(p: Presentation, req: CommandRequest, rec: Record) -> None:
    h = _with_antipode(hopf_from_presentation(p), rec)
    res = pi0(h)
    rec.result = _summary(res.hopf)
    rec.result["separable"] = is_separable(res.hopf.algebra)
    rec.result["whole_algebra"] = res.hopf.dim == h.dim
    rec.add_report(res.report)


def cmd_component0(p: Presentation, req: CommandRequest, rec: Record) -> None:
    h = _with_antipode(hopf_from_presentation(p), rec)
    res = component0(h)
    rec.result = _summary(res.hopf)
    rec.result["idempotent"] = h.algebra.format(res.idempotent, factor=True)
    rec.result["whole_algebra"] = res.hopf.dim == h.dim
    rec.add_report(res.report)


def cmd_points(p: Presentation, req: CommandRequest, rec: Record) -> None:
    if not req.ring:
        raise PresentationError("points needs a test ring (--ring FILE)")
    r = build_algebra(load_presentation(resolve_input(req.ring, req.fixtures_dir)))
    h = _with_antipode(hopf_from_presentation(p), rec)
    g = enumerate_points(h, r, budget=req.budget)
    rec.result = {
        "ring": r.name,
        "ring_field": str(r.spec),
        "order": g.order,
        "points": [g.format_point(i) for i in range(g.order)],
        "identity": g.identity,
        "order_profile": g.order_profile(),
        "abelian": g.is_abelian(),
        "cyclic": g.is_cyclic(),
        "cayley": g.cayley,
        "inverse": g.inverse,
    }
    rec.add_report(g.report)


def cmd_dual(p: Presentation, req: CommandRequest, rec: Record) -> None:
    if req.truncate is not None or p.truncation is not None:
        raise PreconditionError("the graded dual needs a finite-dimensional algebra, not a truncation")
    h = _with_antipode(hopf_from_presentation(p), rec)
    d = graded_dual(h)
    rec.result = _summary(d)
    rec.result["commutative"] = d.algebra.is_graded_commutative()
    rec.result["cocommutative"] = is_cocommutative(d)
    report = Report()
    report.add("double-dual-structure-constants", structure_constants_equal(graded_dual(d), h))
    if d.algebra.is_graded_commutative():
        dec = decompose_local(d.algebra, d.counit_values())
        rec.result["residue_fields"] = [str(f) for f in dec.residue_fields]
        report.extend(verify_hopf(d).checks)
    else:
        rec.notes.append("dual is not graded-commutative; only the double-dual check applies")
    rec.add_report(report)


def cmd_four_factor(p: Presentation, req: CommandRequest, rec: Record) -> None:
    h = _with_antipode(hopf_from_presentation(p), rec)
    ff = four_factor(h)
    rec.result = {
        "factors": [
            {"tag": "/".join(f.tag), "dim": f.dim, "basis": _labels(f.hopf.algebra), "tag_verified": f.tag_verified}
            for f in ff.factors
        ],
        "dimension_product": ff.dimension_product,
        "dim": ff.dim,
    }
    rec.add_report(ff.report)


def cmd_classify(p: Presentation, req: CommandRequest, rec: Record) -> None:
    h = _with_antipode(hopf_from_presentation(p), rec)
    cr = classify_components(h)
    sd = semidirect_check(h)
    rec.result = {"flags": cr.flags(), "pi0_dim": cr.pi0.hopf.dim, "component0_dim": cr.component0.hopf.dim}
    rec.add_report(cr.report)
    rec.add_report(sd.report)
    if cr.gr_local and h.spec.characteristic > 0:
        shape = classify_variety(h)
        rec.result["variety"] = {
            "polynomial": [{"degree": d, "height": ht, "capped": cap} for d, ht, cap in shape.polynomial_generators],
            "exterior": shape.exterior_generators,
            "generators": shape.labels,
        }


def cmd_hilbert(p: Presentation, req: CommandRequest, rec: Record) -> None:
    if not p.comul:
        a = build_algebra(p)
        rec.result = {"hilbert": hilbert_series(a), "dim": a.dim, "degree0_dim": len(a.indices_of_degree(0))}
        return
    h = hopf_from_presentation(p)
    rec.result = {"hilbert": hilbert_series(h.algebra), "dim": h.dim, "degree0_dim": len(h.algebra.indices_of_degree(0))}
    if decompose_local(h.algebra, h.counit_values()).is_gr_local:
        h = _with_antipode(h, rec)
        ok, lhs, rhs = hilbert_factorization(h)
        rec.result["kappa_times_degree0"] = rhs
        rec.result["free_basis_size"] = len(free_basis(h))
        report = Report()
        report.add("hilbert-factorization", ok, f"{lhs} != {rhs}")
        rec.add_report(report)


HANDLERS: dict[str, Callable[[Presentation, CommandRequest, Record], None]] = {
    "verify": cmd_verify,
    "antipode": cmd_antipode,
    "connectivize": cmd_connectivize,
    "decompose": cmd_decompose,
    "pi0": cmd_pi0,
    "component0": cmd_component0,
    "points": cmd_points,
    "dual": cmd_dual,
    "four-factor": cmd_four_factor,
    "classify": cmd_classify,
    "hilbert": cmd_hilbert,
}


def run_one(req: CommandRequest, name: str) -> Record:
    rec = Record(req.command, name)
    try:
        p = load_presentation(resolve_input(name, req.fixtures_dir))
        if req.truncate is not None:
            p = p.with_truncation(req.truncate)
        HANDLERS[req.command](p, req, rec)
    except ParseError as exc:
        rec.fail("parse", str(exc), EXIT_INPUT, line=exc.line, column=exc.column)
    except (FileNotFoundError, PresentationError, FieldError, AlgebraError) as exc:
        rec.fail("input", str(exc), EXIT_INPUT)
    except BudgetExceeded as exc:
        rec.fail("budget", str(exc), EXIT_BUDGET, candidates=exc.candidates, budget=exc.budget)
    except VerificationError as exc:
        rec.checks.extend(exc.report.to_list())
        rec.fail(type(exc).__name__, str(exc), EXIT_FAILED)
    except (PreconditionError, MorphismError) as exc:
        rec.fail("precondition", str(exc), EXIT_FAILED)
    return rec


def run(req: CommandRequest) -> list[Record]:
    return [run_one(req, name) for name in req.inputs]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grhopf", description="Finite graded-commutative Hopf algebras.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("inputs", nargs="+", metavar="FILE", help="presentation file or bundled fixture name")
    ap.add_argument("--json", action="store_true", help="one JSON record per input on stdout")
    ap.add_argument("--ring", help="test ring presentation for 'points'")
    ap.add_argument("--truncate", type=int, help="truncate the algebra above this degree")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum candidate assignments for 'points'")
    ap.add_argument("--fixtures-dir", help="directory searched for fixture names")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    req = CommandRequest(
        args.command, list(args.inputs), args.ring, args.truncate, args.json, args.budget, args.fixtures_dir
    )
    status = 0
    for rec in run(req):
        print(rec.to_json() if req.json else rec.to_text())
        status = max(status, rec.status)
    return status


if __name__ == "__main__":
    sys.exit(main())
