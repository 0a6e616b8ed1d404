"""Utils package initialization."""

from .instances import random_hessenberg, random_scalar, random_unitriangular
from .validators import CHECKS, SOURCE_KINDS, validate_scenario

__all__ = [
    'random_hessenberg',
    'random_scalar',
    'random_unitriangular',
    'CHECKS',
    'SOURCE_KINDS',
    'validate_scenario'
]
