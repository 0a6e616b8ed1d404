"""
Connection matrices between two levels r and r+q.

    P^(r+q)_n = P^(r)_n + sum_{s=n-q}^{n-1} gamma_{n,s} P^(r)_s
    (x - a) P^(r)_n = P^(r+q)_{n+1} + sum_{s=n-d+q}^{n} alpha_{n,s} P^(r+q)_s

Both expansions are computed in full by triangular elimination; the band
limits and the nonzero edge bands are then asserted, not assumed.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict

from algebra.banded import BandedLowerTriangular, BandedN
from algebra.errors import BadShape, BandViolation, ZeroEdgeBand
from algebra.polynomial import Polynomial, expand_in_basis
from algebra.scalars import ScalarLike, as_scalar
from engine.sequence import DOPSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectionPair:
    """L^(r,q) and N^(r,q) for one pair of levels."""

    r: int
    q: int
    L: BandedLowerTriangular
    N: BandedN

    def __post_init__(self) -> None:
        if self.L.q != self.q or self.N.q != self.q:
            raise BadShape(f"factors do not match q = {self.q}")
        self.L.require_edge_band()

    def to_dict(self) -> Dict[str, Any]:
        return {"r": self.r, "q": self.q, "L": self.L.to_dict(), "N": self.N.to_dict()}


def _check_pair(first: DOPSequence, second: DOPSequence) -> None:
    if first.d != second.d:
        raise BadShape(f"sequences disagree on d: {first.d} and {second.d}")


def connection_lower(S_target: DOPSequence, S_source: DOPSequence, q: int) -> BandedLowerTriangular:
    """
    Express level-(r+q) polynomials in the level-r basis.

    Args:
        S_target: Sequence at level r+q
        S_source: Sequence at level r
        q: Level distance; 0 compares a level with itself

    Returns:
        Unit lower triangular section with q bands

    Raises:
        BandViolation: If a coefficient with s < n - q is nonzero
        ZeroEdgeBand: If gamma_{n,n-q} vanishes for some n >= q
    """
    _check_pair(S_target, S_source)
    size = min(len(S_target), len(S_source))
    rows = []
    for n in range(size):
        coefficients = expand_in_basis(S_target[n] - S_source[n], S_source.polynomials)
        coefficients += [0] * (n - len(coefficients))
        for s in range(n - q):
            if coefficients[s] != 0:
                raise BandViolation(n, s)
        rows.append(tuple(coefficients[n - k] for k in range(1, min(n, q) + 1)))
    L = BandedLowerTriangular(q, tuple(rows))
    L.require_edge_band()
    return L


def connection_n_matrix(
    S_source: DOPSequence, S_target: DOPSequence, a: ScalarLike, q: int
) -> BandedN:
    """
    Expand (x - a) P^(r)_n in the level-(r+q) basis.

    Args:
        S_source: Sequence at level r
        S_target: Sequence at level r+q, one degree longer than the rows wanted
        a: Shift point
        q: Level distance, 1..d

    Returns:
        Section with d - q subdiagonal bands and unit superdiagonal;
        for r = 0, q = d this is the upper bidiagonal U

    Raises:
        BandViolation: If a coefficient with s < n - d + q is nonzero
        ZeroEdgeBand: If alpha_{n,n-d+q} vanishes for some n >= d - q
    """
    _check_pair(S_source, S_target)
    d = S_source.d
    width = d - q
    shift = Polynomial.x_minus(as_scalar(a))
    size = min(len(S_source), len(S_target) - 1)
    rows = []
    for n in range(size):
        residual = S_source[n] * shift - S_target[n + 1]
        coefficients = expand_in_basis(residual, S_target.polynomials)
        coefficients += [0] * (n + 1 - len(coefficients))
        for s in range(n - width):
            if coefficients[s] != 0:
                raise BandViolation(n, s)
        if n >= width and coefficients[n - width] == 0:
            raise ZeroEdgeBand(n)
        rows.append(tuple(coefficients[n - k] for k in range(min(n, width) + 1)))
    return BandedN(d, q, tuple(rows))


def connection_pair(
    S_source: DOPSequence, S_target: DOPSequence, r: int, q: int, a: ScalarLike
) -> ConnectionPair:
    """Both connection matrices between level r and level r+q."""
    L = connection_lower(S_target, S_source, q)
    N = connection_n_matrix(S_source, S_target, a, q)
    logger.debug(f"Connection pair (r={r}, q={q}) built on {N.size} rows")
    return ConnectionPair(r, q, L, N)
