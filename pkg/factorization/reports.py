"""
Entrywise comparison of two sections on a leading window.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from algebra.banded import BandedSection
from algebra.errors import WindowTooLarge
from algebra.scalars import format_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mismatch:
    i: int
    j: int
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {"i": self.i, "j": self.j, "lhs": format_scalar(self.lhs), "rhs": format_scalar(self.rhs)}


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity on one window."""

    identity: str
    window: int
    mismatches: Tuple[Mismatch, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "window": self.window,
            "pass": self.passed,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }


def compare_sections(identity: str, lhs: BandedSection, rhs: BandedSection, window: int) -> IdentityReport:
    """
    Compare two sections entrywise on the leading window.

    Raises:
        WindowTooLarge: If either side is smaller than the window
    """
    smaller = min(lhs.size, rhs.size)
    if window > smaller:
        raise WindowTooLarge(window, smaller)
    mismatches = []
    for i in range(window):
        for j in range(window):
            left, right = lhs.entry(i, j), rhs.entry(i, j)
            if left != right:
                mismatches.append(Mismatch(i, j, left, right))
    report = IdentityReport(identity, window, tuple(mismatches))
    if report.passed:
        logger.debug(f"{identity} holds on a {window}x{window} window")
    else:
        logger.warning(f"{identity} fails at {len(mismatches)} entries")
    return report
