"""Functionals package initialization."""

from .moments import (
    FunctionalVector,
    MomentFunctional,
    geronimus_divide,
    multiply_by_x_minus_a,
    pair,
    recombine_vector,
)

__all__ = [
    'FunctionalVector',
    'MomentFunctional',
    'geronimus_divide',
    'multiply_by_x_minus_a',
    'pair',
    'recombine_vector',
]
