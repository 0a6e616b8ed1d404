"""
Between sequences and vectors of orthogonality.

The dual vector is the canonical vector of orthogonality of a sequence
(<u_j, P_n> = delta_{n,j-1}); the moment solve goes the other way and
serves as the independent oracle for every sequence built elsewhere.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from algebra.errors import DegeneracyFailure, HorizonExceeded, RegularityFailure
from algebra.linalg import SingularMatrixError, solve
from algebra.polynomial import Polynomial
from algebra.scalars import ONE, ZERO
from engine.sequence import FROM_MOMENTS, DOPSequence
from functionals.moments import FunctionalVector, MomentFunctional, pair

logger = logging.getLogger(__name__)


def condition_index(k: int, d: int) -> Tuple[int, int]:
    """
    The k-th orthogonality condition (k >= 1) as (m, j) with k = m*d + j.

    Conditions are ordered by increasing m*d + j, so P_n is fixed by the
    first n of them.
    """
    return (k - 1) // d, (k - 1) % d + 1


def moment_budget(N: int, d: int) -> int:
    """
    Highest moment the moment solve touches up to degree ``N``.

    The nonzero condition on P_N pairs x^(N // d) P_N, which dominates
    every zero condition.
    """
    return N + N // d


def dual_functional_vector(S: DOPSequence, horizon: int) -> FunctionalVector:
    """
    Canonical vector of orthogonality of ``S``.

    For each j solves the unit triangular system <u_j, P_n> = delta_{n,j-1},
    n = 0..horizon, for the moments of u_j.

    Args:
        S: Monic sequence reaching at least degree ``horizon``
        horizon: Highest moment to determine

    Returns:
        Vector (u_1, ..., u_d) with common horizon ``horizon``

    Raises:
        HorizonExceeded: If the sequence is shorter than the horizon
    """
    if horizon > S.max_degree:
        raise HorizonExceeded(horizon, S.max_degree)
    entries = []
    for j in range(1, S.d + 1):
        moments: List[Fraction] = []
        for n in range(horizon + 1):
            coeffs = S[n].coefficients
            target = ONE if n == j - 1 else ZERO
            moments.append(target - sum((coeffs[k] * moments[k] for k in range(n)), ZERO))
        entries.append(MomentFunctional(tuple(moments)))
    return FunctionalVector(tuple(entries))


def _solve_degree(V: FunctionalVector, n: int) -> Polynomial:
    d = V.d
    matrix = []
    rhs = []
    for k in range(1, n + 1):
        m, j = condition_index(k, d)
        mu = V[j].moments
        matrix.append([mu[m + i] for i in range(n)])
        rhs.append(-mu[m + n])
    try:
        lower = solve(matrix, rhs)
    except SingularMatrixError as e:
        raise RegularityFailure(n) from e
    return Polynomial(tuple(lower) + (ONE,))


def sequence_from_functionals(V: FunctionalVector, N: int) -> DOPSequence:
    """
    Solve for the monic d-OPS of a vector of functionals directly from moments.

    For each n the non-leading coefficients of P_n solve the n conditions
    <u_j, x^m P_n> = 0 with m*d + j <= n. After all degrees are solved the
    nonzero conditions <u_j, x^m P_{md+j-1}> != 0 are checked.

    Args:
        V: Vector of functionals
        N: Highest degree to solve

    Returns:
        Sequence P_0..P_N tagged from-moments

    Raises:
        HorizonExceeded: If V carries fewer moments than moment_budget(N, d)
        RegularityFailure: At the first degree whose system is singular
        DegeneracyFailure: If a required nonzero pairing vanishes
    """
    d = V.d
    required = moment_budget(N, d)
    if V.horizon < required:
        raise HorizonExceeded(required, V.horizon)
    polynomials = [Polynomial.constant(1)]
    for n in range(1, N + 1):
        polynomials.append(_solve_degree(V, n))
        logger.debug(f"Solved degree {n} from moments (d={d})")
    for n, p in enumerate(polynomials):
        m, j = divmod(n, d)
        j += 1
        if pair(V[j], p.shift(m)) == 0:
            raise DegeneracyFailure(n, j, m)
    return DOPSequence(d, tuple(polynomials), FROM_MOMENTS)


def largest_solvable_degree(V: FunctionalVector) -> int:
    """Highest N whose moment budget fits the horizon of ``V``."""
    N = 0
    while moment_budget(N + 1, V.d) <= V.horizon:
        N += 1
    return N
