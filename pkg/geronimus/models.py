"""
Parameters and results of the Geronimus transformation chain.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from algebra.errors import BadShape
from algebra.scalars import ScalarLike, as_scalar, as_scalars, format_scalar, format_scalars
from engine.sequence import DOPSequence
from functionals.moments import FunctionalVector


@dataclass(frozen=True)
class GeronimusConfig:
    """Shift point a and the Dirac masses M_1..M_d."""

    a: Fraction
    masses: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "masses", as_scalars(self.masses))

    @classmethod
    def create(cls, a: ScalarLike, masses: Sequence[ScalarLike]) -> "GeronimusConfig":
        return cls(as_scalar(a), as_scalars(masses))

    def mass(self, k: int) -> Fraction:
        """M_k with 1-based ``k``."""
        if not 1 <= k <= len(self.masses):
            raise BadShape(f"mass M_{k} is not configured ({len(self.masses)} masses)")
        return self.masses[k - 1]

    def require_d(self, d: int) -> None:
        if len(self.masses) != d:
            raise BadShape(f"{len(self.masses)} masses given for d = {d}")

    def to_dict(self) -> Dict[str, Any]:
        return {"a": format_scalar(self.a), "masses": format_scalars(self.masses)}


@dataclass(frozen=True)
class TransformLevel:
    """
    Level m of the chain: its vector, the determinants d^(m)_1..d^(m)_N and,
    when all of them are nonzero, the transformed sequence.
    """

    m: int
    vector: FunctionalVector
    config: GeronimusConfig
    determinants: Tuple[Fraction, ...] = ()
    sequence: Optional[DOPSequence] = field(default=None)

    @property
    def regular(self) -> bool:
        return all(value != 0 for value in self.determinants)

    def first_vanishing(self) -> Optional[int]:
        """Smallest n with d^(m)_n = 0, if any."""
        for n, value in enumerate(self.determinants, start=1):
            if value == 0:
                return n
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "a": format_scalar(self.config.a),
            "masses": format_scalars(self.config.masses),
            "determinants": format_scalars(self.determinants),
            "sequence": self.sequence.to_dict() if self.sequence is not None else None,
            "vector": self.vector.to_dict(),
        }
