"""Geronimus package initialization."""

from .models import GeronimusConfig, TransformLevel
from .regularity import (
    forbidden_mass_witnesses,
    forbidden_masses,
    regularity_determinants,
    transform_level,
    transformed_sequence_determinant,
)
from .transform import build_level, transform_vector_step

__all__ = [
    'GeronimusConfig',
    'TransformLevel',
    'forbidden_mass_witnesses',
    'forbidden_masses',
    'regularity_determinants',
    'transform_level',
    'transformed_sequence_determinant',
    'build_level',
    'transform_vector_step',
]
