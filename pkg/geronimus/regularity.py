"""
Regularity of the transformed vectors and their sequences.

d^(m)_n is the determinant of pairings <u^(m)_i, P_k> of the level-m
functionals with the level-0 polynomials:

    m > n:  rows P_0..P_{n-1},     columns u^(m)_1..u^(m)_n
    m <= n: rows P_{n-m}..P_{n-1}, columns u^(m)_1..u^(m)_m

and d^(m)_0 = 1. Bordering the same block with one more row and the
column of polynomials gives P^(m)_n * d^(m)_n.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from algebra.errors import RegularityFailure
from algebra.linalg import determinant, minor
from algebra.polynomial import Polynomial, poly_eval
from algebra.scalars import ONE, ScalarLike, as_scalar
from engine.sequence import FROM_DETERMINANT_FORMULA, DOPSequence
from functionals.moments import FunctionalVector, geronimus_divide, pair
from geronimus.models import GeronimusConfig, TransformLevel
from geronimus.transform import build_level

logger = logging.getLogger(__name__)


def _pairings(Vm: FunctionalVector, S: DOPSequence, columns: int, rows: int) -> List[List[Fraction]]:
    """G[k][i] = <u_{i+1}, P_k> for k < rows, i < columns."""
    return [[pair(Vm[i + 1], S[k]) for i in range(columns)] for k in range(rows)]


def _block(pairings: List[List[Fraction]], n: int, m: int) -> List[List[Fraction]]:
    width = min(m, n)
    return [row[:width] for row in pairings[n - width : n]]


def regularity_determinants(
    Vm: FunctionalVector, S: DOPSequence, m: int, Nmax: int
) -> List[Fraction]:
    """
    Compute d^(m)_1..d^(m)_Nmax.

    Args:
        Vm: Level-m vector
        S: Level-0 sequence reaching degree Nmax - 1
        m: Level
        Nmax: Last index

    Returns:
        Exact determinants, index n-1 holding d^(m)_n

    Raises:
        HorizonExceeded: If Vm cannot pair with P_{Nmax-1}
    """
    pairings = _pairings(Vm, S, min(m, Vm.d), Nmax)
    return [determinant(_block(pairings, n, m)) for n in range(1, Nmax + 1)]


def transformed_sequence_determinant(
    Vm: FunctionalVector, S: DOPSequence, m: int, N: int
) -> DOPSequence:
    """
    Level-m sequence from the bordered determinant formula.

    P^(m)_n is the bordered determinant expanded along its polynomial
    column, divided by d^(m)_n. For n < m the border uses P_0..P_n and
    u^(m)_1..u^(m)_n; for n >= m it uses P_{n-m}..P_n and u^(m)_1..u^(m)_m.

    Args:
        Vm: Level-m vector
        S: Level-0 sequence reaching degree N
        m: Level
        N: Highest degree

    Returns:
        Monic sequence P^(m)_0..P^(m)_N tagged from-determinant-formula

    Raises:
        RegularityFailure: At the first n <= N with d^(m)_n = 0
    """
    pairings = _pairings(Vm, S, min(m, Vm.d), N + 1)
    polynomials = [Polynomial.constant(1)]
    for n in range(1, N + 1):
        width = min(m, n)
        bordered = [row[:width] for row in pairings[n - width : n + 1]]
        d_n = determinant(bordered[:-1])
        if d_n == 0:
            raise RegularityFailure(n)
        p = Polynomial()
        for r, row in enumerate(bordered):
            cofactor = determinant(minor(bordered, r, width))
            if cofactor == 0:
                continue
            sign = 1 if (r + width) % 2 == 0 else -1
            p = p + S[n - width + r] * (sign * cofactor)
        polynomials.append(p * (ONE / d_n))
    return DOPSequence(S.d, tuple(polynomials), FROM_DETERMINANT_FORMULA)


def forbidden_mass_witnesses(
    V0: FunctionalVector, S: DOPSequence, a: ScalarLike, n_range: Iterable[int]
) -> Dict[Fraction, int]:
    """
    Masses M_1 that make d^(1)_n vanish, with the first n each one breaks.

    d^(1)_n = <u_d/(x-a), P_{n-1}> + M_1 P_{n-1}(a), so for P_{n-1}(a) != 0
    the excluded value is -<u_d/(x-a), P_{n-1}> / P_{n-1}(a). Degrees with
    P_{n-1}(a) = 0 put no constraint on M_1 and are skipped.

    Args:
        V0: Vector the step starts from
        S: Its sequence
        a: Shift point
        n_range: Indices n >= 1 to examine

    Returns:
        Mapping mass -> first witness n, in order of discovery
    """
    a = as_scalar(a)
    divided = geronimus_divide(V0[V0.d], a, 0)
    witnesses: Dict[Fraction, int] = {}
    for n in n_range:
        if n < 1:
            continue
        at_shift = poly_eval(S[n - 1], a)
        if at_shift == 0:
            if pair(divided, S[n - 1]) == 0:
                logger.warning(f"d^(1)_{n} vanishes for every mass")
            else:
                logger.debug(f"P_{n - 1}(a) = 0, degree {n} puts no constraint on M_1")
            continue
        mass = -pair(divided, S[n - 1]) / at_shift
        witnesses.setdefault(mass, n)
    return witnesses


def forbidden_masses(
    V0: FunctionalVector, S: DOPSequence, a: ScalarLike, n_range: Iterable[int]
) -> List[Fraction]:
    """Deduplicated excluded values of M_1 over ``n_range``."""
    return list(forbidden_mass_witnesses(V0, S, a, n_range))


def transform_level(
    V0: FunctionalVector, S: DOPSequence, cfg: GeronimusConfig, m: int, N: int
) -> TransformLevel:
    """
    Build level m: vector, determinants d^(m)_1..d^(m)_N and, if regular, P^(m).

    Args:
        V0: Level-0 vector
        S: Level-0 sequence reaching degree N
        cfg: Shift point and masses
        m: Level, 0..d
        N: Highest degree

    Returns:
        The level; its sequence is None when some d^(m)_n vanishes
    """
    if m == 0:
        return TransformLevel(0, V0, cfg, (), S.truncate(N))
    Vm = build_level(V0, cfg, m)
    determinants = tuple(regularity_determinants(Vm, S, m, N))
    sequence: Optional[DOPSequence] = None
    if all(value != 0 for value in determinants):
        sequence = transformed_sequence_determinant(Vm, S, m, N)
        logger.info(f"Level {m} is regular up to degree {N}")
    else:
        first = next(n for n, value in enumerate(determinants, start=1) if value == 0)
        logger.info(f"Level {m} is not regular: d^({m})_{first} = 0")
    return TransformLevel(m, Vm, cfg, determinants, sequence)
