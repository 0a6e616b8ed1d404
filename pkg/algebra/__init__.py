"""Algebra package initialization."""

from .banded import (
    BandedHessenberg,
    BandedLowerTriangular,
    BandedN,
    BandedSection,
    DenseSection,
    banded_multiply,
    multiply_chain,
    safe_window,
)
from .linalg import SingularMatrixError, determinant, solve
from .polynomial import Polynomial, expand_in_basis, poly_eval
from .scalars import Scalar, as_scalar, format_scalar

__all__ = [
    'BandedHessenberg',
    'BandedLowerTriangular',
    'BandedN',
    'BandedSection',
    'DenseSection',
    'banded_multiply',
    'multiply_chain',
    'safe_window',
    'SingularMatrixError',
    'determinant',
    'solve',
    'Polynomial',
    'expand_in_basis',
    'poly_eval',
    'Scalar',
    'as_scalar',
    'format_scalar',
]
