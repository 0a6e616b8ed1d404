"""
Seeded random instances.

Every generator takes an explicit ``random.Random`` so that a run is a
deterministic function of its seed.
"""

import random
from fractions import Fraction
from typing import List

from algebra.banded import BandedHessenberg
from algebra.scalars import ONE, ZERO


def random_scalar(rng: random.Random, max_numerator: int = 9, max_denominator: int = 7, nonzero: bool = False) -> Fraction:
    """
    Draw p/q with |p| <= max_numerator and 1 <= q <= max_denominator.

    Args:
        rng: Random source
        max_numerator: Bound on the numerator
        max_denominator: Bound on the denominator
        nonzero: Redraw until the value is nonzero

    Returns:
        The drawn rational
    """
    while True:
        value = Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator))
        if value != 0 or not nonzero:
            return value


def random_hessenberg(
    d: int, size: int, rng: random.Random, max_numerator: int = 9, max_denominator: int = 7
) -> BandedHessenberg:
    """Random recurrence section whose low band a_{n,n-d} never vanishes."""
    bands = []
    for n in range(size):
        row = [random_scalar(rng, max_numerator, max_denominator) for _ in range(min(n, d) + 1)]
        if n >= d:
            row[d] = random_scalar(rng, max_numerator, max_denominator, nonzero=True)
        bands.append(row)
    return BandedHessenberg(d, bands)


def random_unitriangular(d: int, rng: random.Random, max_numerator: int = 9, max_denominator: int = 7) -> List[List[Fraction]]:
    """d x d unit lower triangular array."""
    rows = []
    for j in range(d):
        rows.append([
            random_scalar(rng, max_numerator, max_denominator) if i < j else (ONE if i == j else ZERO)
            for i in range(d)
        ])
    return rows
