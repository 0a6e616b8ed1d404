"""
The (d+2)-term recurrence in both directions.

x P_n = P_{n+1} + sum_{k=0}^{d} a_{n,n-k} P_{n-k}, with P_0 = 1 and
P_{-1} = ... = P_{-d} = 0.
"""

import logging

from algebra.banded import BandedHessenberg
from algebra.errors import BadShape, BandViolation, ZeroLowBand
from algebra.polynomial import Polynomial, expand_in_basis
from engine.sequence import FROM_MATRIX, DOPSequence

logger = logging.getLogger(__name__)


def generate_sequence(J: BandedHessenberg, N: int) -> DOPSequence:
    """
    Run the recurrence encoded by ``J`` up to degree ``N``.

    Args:
        J: Recurrence section with at least N rows
        N: Highest degree to produce

    Returns:
        Monic sequence P_0..P_N tagged from-matrix

    Raises:
        BadShape: If the section is too short
    """
    if J.size < N:
        raise BadShape(f"section of size {J.size} cannot generate degree {N}")
    polynomials = [Polynomial.constant(1)]
    for n in range(N):
        nxt = polynomials[n].shift()
        for k in range(min(n, J.d) + 1):
            a = J.coefficient(n, k)
            if a != 0:
                nxt = nxt - polynomials[n - k] * a
        polynomials.append(nxt)
    logger.debug(f"Generated d={J.d} sequence up to degree {N}")
    return DOPSequence(J.d, tuple(polynomials), FROM_MATRIX)


def recurrence_from_sequence(S: DOPSequence) -> BandedHessenberg:
    """
    Recover the recurrence section from a monic sequence.

    Expands x P_n - P_{n+1} in the basis {P_k} for n = 0..N-1 and keeps the
    coefficients k = n-d..n.

    Args:
        S: Monic sequence P_0..P_N

    Returns:
        Section of size N (rows 0..N-1)

    Raises:
        BandViolation: If a coefficient with k < n - d is nonzero
        ZeroLowBand: If a_{n,n-d} vanishes for some n >= d
    """
    d = S.d
    bands = []
    for n in range(S.max_degree):
        residual = S[n].shift() - S[n + 1]
        coefficients = expand_in_basis(residual, S.polynomials)
        coefficients += [0] * (n + 1 - len(coefficients))
        for k in range(n - d):
            if coefficients[k] != 0:
                raise BandViolation(n, k)
        if n >= d and coefficients[n - d] == 0:
            raise ZeroLowBand(n)
        bands.append(tuple(coefficients[n - k] for k in range(min(n, d) + 1)))
    return BandedHessenberg(d, tuple(bands))
