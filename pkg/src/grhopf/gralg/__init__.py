"""Graded-commutative algebras."""

from .algebra import (
    AlgebraError,
    Element,
    GradedAlgebra,
    build_algebra,
    degree_zero_part,
    field_algebra,
    hilbert_series,
    ideal_span,
    quotient_algebra,
    subalgebra,
    tensor_product,
)
from .decompose import Decomposition, ResidueField, decompose_local, is_separable, lift_idempotent
from .morphism import Morphism, MorphismError, make_morphism
from .presentation import Generator, Presentation, PresentationError, Relation

__all__ = [
    "AlgebraError",
    "Decomposition",
    "Element",
    "Generator",
    "GradedAlgebra",
    "Morphism",
    "MorphismError",
    "Presentation",
    "PresentationError",
    "Relation",
    "ResidueField",
    "build_algebra",
    "decompose_local",
    "degree_zero_part",
    "field_algebra",
    "hilbert_series",
    "ideal_span",
    "is_separable",
    "lift_idempotent",
    "make_morphism",
    "quotient_algebra",
    "subalgebra",
    "tensor_product",
]
