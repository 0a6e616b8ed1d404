"""
The bidiagonal chain L^(1), ..., L^(d), U of a full sequence of levels.

L^(m+1) connects level m+1 to level m with one band, and U expands
(x - a) P_n in the level-d basis. Multiplying the chain in cyclic order
gives J^(m) - aI for every m = 1..d.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.banded import BandedLowerTriangular, BandedN, multiply_chain, safe_window
from algebra.errors import BadShape, BandStructureError, ChainBroken, ZeroAtShift
from algebra.polynomial import poly_eval
from algebra.scalars import ScalarLike, as_scalar, format_scalar
from engine.sequence import DOPSequence
from factorization.connection import connection_lower, connection_n_matrix
from factorization.reports import IdentityReport, compare_sections

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BidiagonalChain:
    """
    Factors of J^(m) - aI.

    Attributes:
        a: Shift point
        L_factors: L^(1)..L^(d), each unit lower bidiagonal
        U: Upper bidiagonal with nonzero diagonal and unit superdiagonal
    """

    a: Fraction
    L_factors: Tuple[BandedLowerTriangular, ...]
    U: BandedN

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "L_factors", tuple(self.L_factors))
        if self.U.q != self.U.d:
            raise BadShape(f"U must have no subdiagonal bands, got {self.U.d - self.U.q}")
        if len(self.L_factors) != self.U.d:
            raise BadShape(f"expected {self.U.d} lower factors, got {len(self.L_factors)}")
        for L in self.L_factors:
            if L.q != 1:
                raise BadShape(f"lower factors must be bidiagonal, got {L.q} bands")
            L.require_edge_band()

    @property
    def d(self) -> int:
        return self.U.d

    def factor(self, m: int) -> BandedLowerTriangular:
        """L^(m), 1-based."""
        return self.L_factors[m - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": format_scalar(self.a),
            "L": [L.to_dict() for L in self.L_factors],
            "U": self.U.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BidiagonalChain":
        try:
            factors = tuple(BandedLowerTriangular.from_dict(item) for item in data["L"])
            return cls(data["a"], factors, BandedN.from_dict(data["U"]))
        except (KeyError, TypeError) as e:
            raise BadShape(f"malformed chain: {e}") from e


def verify_product_factorization(
    levels: Sequence[DOPSequence], L_factors: Sequence[BandedLowerTriangular], window: int
) -> List[IdentityReport]:
    """
    Check L^(r,q) = L^(r+q) ... L^(r+1) for every r + q <= d with q >= 2.

    Args:
        levels: Sequences for levels 0..d
        L_factors: L^(1)..L^(d)
        window: Leading block to compare

    Returns:
        One report per pair (r, q); empty for d = 1
    """
    d = len(L_factors)
    reports = []
    for q in range(2, d + 1):
        for r in range(0, d - q + 1):
            direct = connection_lower(levels[r + q], levels[r], q)
            product = multiply_chain([L_factors[k - 1] for k in range(r + q, r, -1)], window)
            reports.append(compare_sections(f"L^(r,q)=product[r={r},q={q}]", direct, product, window))
    return reports


def build_chain(levels: Sequence[Optional[DOPSequence]], a: ScalarLike) -> BidiagonalChain:
    """
    Build L^(1)..L^(d) and U from the sequences of levels 0..d.

    Args:
        levels: Sequences for m = 0..d, all built to the same degree;
            None marks a level that is not regular
        a: Shift point

    Returns:
        The chain, after the product factorization of every L^(r,q)
        has been checked on the safe window

    Raises:
        ChainBroken: At the first level that is missing or fails to connect
    """
    a = as_scalar(a)
    if len(levels) < 2:
        raise BadShape("a chain needs at least levels 0 and 1")
    d = len(levels) - 1
    for m, level in enumerate(levels):
        if level is None:
            raise ChainBroken(m, "level is not regular")
        if level.d != d:
            raise BadShape(f"level {m} has d = {level.d}, expected {d}")

    factors = []
    for m in range(d):
        try:
            factors.append(connection_lower(levels[m + 1], levels[m], 1))
        except BandStructureError as e:
            raise ChainBroken(m + 1, str(e)) from e
    try:
        U = connection_n_matrix(levels[0], levels[d], a, d)
    except BandStructureError as e:
        raise ChainBroken(d, str(e)) from e

    window = safe_window(levels[0].max_degree, d)
    for report in verify_product_factorization(levels, factors, window):
        if not report.passed:
            raise ChainBroken(d, f"{report.identity} fails")
    logger.info(f"Built bidiagonal chain for d={d} on {U.size} rows")
    return BidiagonalChain(a, tuple(factors), U)


def u_diagonal_from_pd(S_d: DOPSequence, a: ScalarLike, U: Optional[BandedN] = None) -> List[Fraction]:
    """
    Diagonal of U from the level-d polynomials at the shift point.

    s_n = -P^(d)_{n+1}(a) / P^(d)_n(a).

    Args:
        S_d: Level-d sequence
        a: Shift point
        U: If given, its diagonal is compared with the computed one

    Returns:
        s_0..s_{N-1} for a sequence reaching degree N

    Raises:
        ZeroAtShift: If some P^(d)_n(a) vanishes
        ChainBroken: If U is given and its diagonal disagrees
    """
    a = as_scalar(a)
    values = [poly_eval(p, a) for p in S_d]
    for n, value in enumerate(values):
        if value == 0:
            raise ZeroAtShift(n)
    diagonal = [-values[n + 1] / values[n] for n in range(len(values) - 1)]
    if U is not None:
        for n, (computed, stored) in enumerate(zip(diagonal, U.diagonal())):
            if computed != stored:
                raise ChainBroken(S_d.d, f"U diagonal differs at row {n}: {stored} != {computed}")
    return diagonal
