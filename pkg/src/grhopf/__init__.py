"""Finite graded-commutative Hopf algebras over exact fields."""

from .checks import Report, VerificationError
from .cli.parser import ParseError, load_presentation, parse_presentation, print_presentation
from .exactfield import FieldSpec, get_field
from .gralg import GradedAlgebra, Morphism, Presentation, build_algebra, decompose_local, make_morphism
from .hopf import (
    HopfAlgebra,
    connectivize,
    graded_dual,
    hopf_from_presentation,
    synthesize_antipode,
    verify_hopf,
)
from .points import enumerate_points, nil_set
from .scheme import classify_components, component0, four_factor, pi0, semidirect_check


def load_hopf(path) -> HopfAlgebra:
    """Hopf algebra from a presentation file (antipode synthesized when not given)."""
    h = hopf_from_presentation(load_presentation(path))
    return h if h.antipode is not None else synthesize_antipode(h)


__all__ = [
    "FieldSpec",
    "GradedAlgebra",
    "HopfAlgebra",
    "Morphism",
    "ParseError",
    "Presentation",
    "Report",
    "VerificationError",
    "build_algebra",
    "classify_components",
    "component0",
    "connectivize",
    "decompose_local",
    "enumerate_points",
    "four_factor",
    "get_field",
    "graded_dual",
    "hopf_from_presentation",
    "load_hopf",
    "load_presentation",
    "make_morphism",
    "nil_set",
    "parse_presentation",
    "pi0",
    "print_presentation",
    "semidirect_check",
    "synthesize_antipode",
    "verify_hopf",
]
