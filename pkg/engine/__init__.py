"""Engine package initialization."""

from .duality import (
    dual_functional_vector,
    largest_solvable_degree,
    moment_budget,
    sequence_from_functionals,
)
from .orthogonality import OrthogonalityReport, verify_orthogonality
from .recurrence import generate_sequence, recurrence_from_sequence
from .sequence import DOPSequence

__all__ = [
    'dual_functional_vector',
    'largest_solvable_degree',
    'moment_budget',
    'sequence_from_functionals',
    'OrthogonalityReport',
    'verify_orthogonality',
    'generate_sequence',
    'recurrence_from_sequence',
    'DOPSequence',
]
