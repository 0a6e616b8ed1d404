"""
Factorization identities of the shifted recurrence matrices.
"""

import logging
from typing import List, Sequence

from algebra.banded import BandedHessenberg, BandedSection, multiply_chain
from algebra.scalars import ScalarLike, as_scalar
from engine.sequence import DOPSequence
from factorization.chain import BidiagonalChain
from factorization.connection import ConnectionPair, connection_n_matrix
from factorization.reports import IdentityReport, compare_sections

logger = logging.getLogger(__name__)


def chain_order(chain: BidiagonalChain, m: int) -> List[BandedSection]:
    """Factors L^(m)..L^(1), U, L^(d)..L^(m+1)."""
    head = [chain.factor(k) for k in range(m, 0, -1)]
    tail = [chain.factor(k) for k in range(chain.d, m, -1)]
    return head + [chain.U] + tail


def verify_theorem4(
    J_r: BandedHessenberg,
    J_rq: BandedHessenberg,
    pair: ConnectionPair,
    a: ScalarLike,
    window: int,
) -> List[IdentityReport]:
    """
    Check J^(r) - aI = N L and J^(r+q) - aI = L N.

    Args:
        J_r: Recurrence section at level r
        J_rq: Recurrence section at level r+q
        pair: Connection matrices of the two levels
        a: Shift point
        window: Leading block to compare

    Returns:
        One report per identity

    Raises:
        WindowTooLarge: If the window exceeds what the sections support
    """
    a = as_scalar(a)
    tag = f"r={pair.r},q={pair.q}"
    return [
        compare_sections(f"J^(r)-aI=NL[{tag}]", J_r.shifted(a), multiply_chain([pair.N, pair.L], window), window),
        compare_sections(f"J^(r+q)-aI=LN[{tag}]", J_rq.shifted(a), multiply_chain([pair.L, pair.N], window), window),
    ]


def verify_theorem3(
    J_levels: Sequence[BandedHessenberg], chain: BidiagonalChain, a: ScalarLike, window: int
) -> List[IdentityReport]:
    """
    Check J^(m) - aI = L^(m)...L^(1) U L^(d)...L^(m+1) for m = 1..d.

    Raises:
        WindowTooLarge: If the window exceeds what the factors support
    """
    a = as_scalar(a)
    reports = []
    for m in range(1, chain.d + 1):
        product = multiply_chain(chain_order(chain, m), window)
        reports.append(compare_sections(f"theorem3[m={m}]", J_levels[m].shifted(a), product, window))
    return reports


def verify_n_factorization(
    levels: Sequence[DOPSequence], chain: BidiagonalChain, window: int
) -> List[IdentityReport]:
    """
    Check N^(r,d-r) = L^(r)...L^(1) U for r = 1..d-1.

    N^(r,d-r) is computed directly from levels r and d.
    """
    reports = []
    for r in range(1, chain.d):
        direct = connection_n_matrix(levels[r], levels[chain.d], chain.a, chain.d - r)
        product = multiply_chain(chain_order(chain, r)[: r + 1], window)
        reports.append(compare_sections(f"N^(r,d-r)=L...LU[r={r}]", direct, product, window))
    return reports
