"""
Check a sequence against a vector of functionals.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from algebra.scalars import format_scalar
from engine.sequence import DOPSequence
from functionals.moments import FunctionalVector, pair

ZERO_CONDITION = "zero"
NONZERO_CONDITION = "nonzero"


@dataclass(frozen=True)
class OrthogonalityCheck:
    """One pairing <u_j, x^m P_n> and whether it has the required (non)vanishing."""

    j: int
    m: int
    n: int
    kind: str
    passed: bool
    value: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "j": self.j,
            "m": self.m,
            "n": self.n,
            "kind": self.kind,
            "pass": self.passed,
            "value": format_scalar(self.value),
        }


@dataclass(frozen=True)
class OrthogonalityReport:
    checks: Tuple[OrthogonalityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[OrthogonalityCheck]:
        return [c for c in self.checks if not c.passed]

    def to_list(self) -> List[Dict[str, Any]]:
        return [c.to_dict() for c in self.checks]


def verify_orthogonality(V: FunctionalVector, S: DOPSequence) -> OrthogonalityReport:
    """
    Evaluate every d-orthogonality condition the horizon of ``V`` reaches.

    Zero conditions: <u_j, x^m P_n> = 0 for n >= m*d + j.
    Nonzero conditions: <u_j, x^m P_n> != 0 for n = m*d + j - 1.

    Args:
        V: Vector of functionals
        S: Sequence to check

    Returns:
        Report over all checked (j, m, n), ordered by n, j, m
    """
    d = V.d
    checks = []
    for n, p in enumerate(S):
        for j in range(1, d + 1):
            m = 0
            while m * d + j - 1 <= n and m + n <= V.horizon:
                value = pair(V[j], p.shift(m))
                if n >= m * d + j:
                    checks.append(OrthogonalityCheck(j, m, n, ZERO_CONDITION, value == 0, value))
                else:
                    checks.append(OrthogonalityCheck(j, m, n, NONZERO_CONDITION, value != 0, value))
                m += 1
    return OrthogonalityReport(tuple(checks))
