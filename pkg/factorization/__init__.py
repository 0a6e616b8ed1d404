"""Factorization package initialization."""

from .chain import BidiagonalChain, build_chain, u_diagonal_from_pd, verify_product_factorization
from .connection import ConnectionPair, connection_lower, connection_n_matrix, connection_pair
from .reports import IdentityReport, Mismatch, compare_sections
from .verify import chain_order, verify_n_factorization, verify_theorem3, verify_theorem4

__all__ = [
    'BidiagonalChain',
    'build_chain',
    'u_diagonal_from_pd',
    'verify_product_factorization',
    'ConnectionPair',
    'connection_lower',
    'connection_n_matrix',
    'connection_pair',
    'IdentityReport',
    'Mismatch',
    'compare_sections',
    'chain_order',
    'verify_n_factorization',
    'verify_theorem3',
    'verify_theorem4',
]
