"""
Monic d-orthogonal polynomial sequences.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Tuple

from algebra.errors import BadShape
from algebra.polynomial import Polynomial

FROM_MATRIX = "from-matrix"
FROM_MOMENTS = "from-moments"
FROM_DETERMINANT_FORMULA = "from-determinant-formula"

SOURCES = (FROM_MATRIX, FROM_MOMENTS, FROM_DETERMINANT_FORMULA)


@dataclass(frozen=True)
class DOPSequence:
    """P_0..P_N, each monic with deg P_n = n."""

    d: int
    polynomials: Tuple[Polynomial, ...]
    source: str = FROM_MATRIX

    def __post_init__(self) -> None:
        polynomials = tuple(self.polynomials)
        if self.d < 1:
            raise BadShape(f"band parameter must be positive, got {self.d}")
        if self.source not in SOURCES:
            raise BadShape(f"unknown sequence source {self.source!r}")
        if not polynomials:
            raise BadShape("a sequence needs at least P_0")
        for n, p in enumerate(polynomials):
            if p.degree != n or not p.is_monic:
                raise BadShape(f"P_{n} is not monic of degree {n}")
        object.__setattr__(self, "polynomials", polynomials)

    @property
    def max_degree(self) -> int:
        return len(self.polynomials) - 1

    def __len__(self) -> int:
        return len(self.polynomials)

    def __getitem__(self, n: int) -> Polynomial:
        return self.polynomials[n]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polynomials)

    def truncate(self, max_degree: int) -> "DOPSequence":
        if max_degree > self.max_degree:
            raise BadShape(f"sequence only reaches degree {self.max_degree}")
        return DOPSequence(self.d, self.polynomials[: max_degree + 1], self.source)

    def same_polynomials(self, other: "DOPSequence") -> bool:
        """Coefficient-for-coefficient equality, ignoring the source tag."""
        return self.d == other.d and self.polynomials == other.polynomials

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "source": self.source,
            "polynomials": [p.to_json() for p in self.polynomials],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DOPSequence":
        try:
            return cls(
                int(data["d"]),
                tuple(Polynomial.from_json(p) for p in data["polynomials"]),
                data.get("source", FROM_MATRIX),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise BadShape(f"malformed sequence: {e}") from e
