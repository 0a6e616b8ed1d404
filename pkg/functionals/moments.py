"""
Linear functionals on polynomials, represented by their moments.

A functional u is stored as (<u, 1>, <u, x>, ..., <u, x^H>); H is its
horizon. Division by (x - a) gains one moment, multiplication loses one.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Sequence, Tuple

from algebra.errors import BadShape, HorizonExceeded
from algebra.polynomial import Polynomial
from algebra.scalars import ONE, ZERO, ScalarLike, as_scalar, as_scalars, format_scalars

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentFunctional:
    """Moments <u, x^k> for k = 0..horizon."""

    moments: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        moments = as_scalars(self.moments)
        if not moments:
            raise BadShape("a functional needs at least its zeroth moment")
        object.__setattr__(self, "moments", moments)

    @classmethod
    def dirac(cls, a: ScalarLike, horizon: int) -> "MomentFunctional":
        """Moments of delta_a: a^k."""
        a = as_scalar(a)
        moments = [ONE]
        for _ in range(horizon):
            moments.append(moments[-1] * a)
        return cls(tuple(moments))

    @property
    def horizon(self) -> int:
        return len(self.moments) - 1

    def truncate(self, horizon: int) -> "MomentFunctional":
        if horizon > self.horizon:
            raise HorizonExceeded(horizon, self.horizon)
        return MomentFunctional(self.moments[: horizon + 1])

    def __add__(self, other: "MomentFunctional") -> "MomentFunctional":
        horizon = min(self.horizon, other.horizon)
        return MomentFunctional(
            tuple(self.moments[k] + other.moments[k] for k in range(horizon + 1))
        )

    def __mul__(self, factor: ScalarLike) -> "MomentFunctional":
        factor = as_scalar(factor)
        return MomentFunctional(tuple(m * factor for m in self.moments))

    __rmul__ = __mul__

    def to_dict(self) -> Dict[str, Any]:
        return {"moments": format_scalars(self.moments)}

    @classmethod
    def from_dict(cls, data: Any) -> "MomentFunctional":
        if isinstance(data, dict):
            data = data.get("moments")
        if not isinstance(data, list):
            raise BadShape("functional must carry a list of moments")
        return cls(as_scalars(data))


@dataclass(frozen=True)
class FunctionalVector:
    """The d-tuple (u_1, ..., u_d) sharing one horizon."""

    entries: Tuple[MomentFunctional, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise BadShape("a functional vector needs at least one entry")
        horizons = {u.horizon for u in entries}
        if len(horizons) != 1:
            raise BadShape(f"entries disagree on the horizon: {sorted(horizons)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def aligned(cls, entries: Iterable[MomentFunctional]) -> "FunctionalVector":
        """Build a vector truncating every entry to the smallest horizon."""
        entries = tuple(entries)
        horizon = min(u.horizon for u in entries)
        return cls(tuple(u.truncate(horizon) for u in entries))

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def horizon(self) -> int:
        return self.entries[0].horizon

    def __getitem__(self, j: int) -> MomentFunctional:
        """Entry u_j with 1-based ``j``."""
        if not 1 <= j <= self.d:
            raise IndexError(f"functional index {j} outside 1..{self.d}")
        return self.entries[j - 1]

    def truncate(self, horizon: int) -> "FunctionalVector":
        return FunctionalVector(tuple(u.truncate(horizon) for u in self.entries))

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "entries": [u.to_dict() for u in self.entries]}

    @classmethod
    def from_dict(cls, data: Any) -> "FunctionalVector":
        if isinstance(data, dict):
            declared = data.get("d")
            data = data.get("entries")
        else:
            declared = None
        if not isinstance(data, list):
            raise BadShape("functional vector must carry a list of entries")
        vector = cls(tuple(MomentFunctional.from_dict(e) for e in data))
        if declared is not None and declared != vector.d:
            raise BadShape(f"vector declares d = {declared} but has {vector.d} entries")
        return vector


def pair(u: MomentFunctional, p: Polynomial) -> Fraction:
    """
    Apply a functional to a polynomial.

    Args:
        u: Functional given by its moments
        p: Polynomial of degree at most the horizon of u

    Returns:
        <u, p> = sum c_k * mu_k

    Raises:
        HorizonExceeded: If deg p exceeds the horizon
    """
    if p.degree > u.horizon:
        raise HorizonExceeded(p.degree, u.horizon)
    return sum((c * m for c, m in zip(p.coefficients, u.moments)), ZERO)


def multiply_by_x_minus_a(u: MomentFunctional, a: ScalarLike) -> MomentFunctional:
    """
    Left-multiply by (x - a): mu'_k = mu_{k+1} - a * mu_k.

    Raises:
        HorizonExceeded: On a functional with a single moment
    """
    if u.horizon < 1:
        raise HorizonExceeded(1, u.horizon)
    a = as_scalar(a)
    mu = u.moments
    return MomentFunctional(tuple(mu[k + 1] - a * mu[k] for k in range(u.horizon)))


def geronimus_divide(u: MomentFunctional, a: ScalarLike, mass: ScalarLike) -> MomentFunctional:
    """
    Solve (x - a) v = u, fixing the free Dirac part by <v, 1> = mass.

    With <u/(x-a), p> = <u, (p(x) - p(a))/(x - a)> the result is
    u/(x - a) + mass * delta_a, whose moments satisfy
    nu_0 = mass and nu_k = a * nu_{k-1} + mu_{k-1}.

    Args:
        u: Functional to divide
        a: Shift point
        mass: Dirac mass at a

    Returns:
        Functional with one more moment than ``u``
    """
    a = as_scalar(a)
    nu = [as_scalar(mass)]
    for mu in u.moments:
        nu.append(a * nu[-1] + mu)
    return MomentFunctional(tuple(nu))


def recombine_vector(
    vector: FunctionalVector, coefficients: Sequence[Sequence[ScalarLike]]
) -> FunctionalVector:
    """
    Mix a vector of orthogonality by a unit lower triangular array.

    v_j = u_j + sum_{i<j} lambda[j][i] * u_i.

    Args:
        vector: The vector (u_1, ..., u_d)
        coefficients: d x d unit lower triangular array, row j holds lambda^(j)

    Returns:
        The recombined vector

    Raises:
        BadShape: If the array is not d x d unitriangular
    """
    d = vector.d
    if len(coefficients) != d or any(len(row) != d for row in coefficients):
        raise BadShape(f"recombination array must be {d} x {d}")
    lam = [as_scalars(row) for row in coefficients]
    for j in range(d):
        if lam[j][j] != 1:
            raise BadShape(f"diagonal entry {j} of the recombination array is not 1")
        if any(lam[j][i] != 0 for i in range(j + 1, d)):
            raise BadShape(f"row {j} of the recombination array has entries above the diagonal")
    entries = []
    for j in range(d):
        combined = vector.entries[j]
        for i in range(j):
            if lam[j][i] != 0:
                combined = combined + lam[j][i] * vector.entries[i]
        entries.append(combined)
    logger.debug(f"Recombined a vector of {d} functionals")
    return FunctionalVector(tuple(entries))
