"""
Transformed vectors of functionals.

One step divides the last functional by (x - a) and shifts the others:
(x - a) u'_1 = u_d, u'_i = u_{i-1}. Level m is reachable directly from
level 0 without building the levels in between.
"""

import logging

from algebra.errors import BadShape
from algebra.scalars import ScalarLike, as_scalar
from functionals.moments import FunctionalVector, geronimus_divide
from geronimus.models import GeronimusConfig

logger = logging.getLogger(__name__)


def transform_vector_step(V: FunctionalVector, a: ScalarLike, mass: ScalarLike) -> FunctionalVector:
    """
    One Geronimus step with Dirac mass ``mass`` at ``a``.

    Args:
        V: Vector (u_1, ..., u_d)
        a: Shift point
        mass: Mass of the new first entry

    Returns:
        (u_d/(x-a) + mass*delta_a, u_1, ..., u_{d-1}), truncated to a common horizon
    """
    first = geronimus_divide(V[V.d], a, mass)
    return FunctionalVector.aligned((first,) + V.entries[:-1])


def build_level(V0: FunctionalVector, cfg: GeronimusConfig, m: int) -> FunctionalVector:
    """
    Level-m vector built straight from level 0.

    u^(m)_j = u_{d-m+j}/(x-a) + M_{m-j+1} delta_a for j <= m and
    u^(m)_j = u_{j-m} for j > m.

    Args:
        V0: Level-0 vector
        cfg: Shift point and masses
        m: Level, 1..d

    Returns:
        Level-m vector, truncated to a common horizon

    Raises:
        BadShape: If m is out of range or a needed mass is missing
    """
    d = V0.d
    if not 1 <= m <= d:
        raise BadShape(f"level must lie in 1..{d}, got {m}")
    a = as_scalar(cfg.a)
    entries = []
    for j in range(1, d + 1):
        if j <= m:
            entries.append(geronimus_divide(V0[d - m + j], a, cfg.mass(m - j + 1)))
        else:
            entries.append(V0[j - m])
    logger.debug(f"Built level {m} vector (d={d})")
    return FunctionalVector.aligned(entries)
