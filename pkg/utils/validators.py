"""
Scenario validation utilities.

Validates scenario documents before any computation starts.
"""

from typing import Any, Dict, List

from algebra.errors import ScenarioError
from config.settings import settings

SOURCE_KINDS = ("hessenberg", "moments", "random")

CHECKS = (
    "orthogonality",
    "oracle",
    "theorem4",
    "theorem3",
    "product_factorization",
    "n_factorization",
    "u_diagonal",
)


def validate_degree(d: Any, N: Any) -> None:
    """
    Validate the band parameter and the maximal degree.

    Args:
        d: Number of functionals
        N: Maximal degree

    Raises:
        ScenarioError: If d < 1, N < d + 2 or N exceeds the configured cap
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ScenarioError(f"d must be a positive integer, got {d!r}")
    if not isinstance(N, int) or isinstance(N, bool):
        raise ScenarioError(f"N must be an integer, got {N!r}")
    if N < d + 2:
        raise ScenarioError(f"N must be at least d + 2 = {d + 2}, got {N}")
    if N > settings.MAX_DEGREE:
        raise ScenarioError(f"N = {N} exceeds DOPS_MAX_DEGREE = {settings.MAX_DEGREE}")


def validate_source(source: Any) -> str:
    """
    Validate the source block and return its kind.

    Raises:
        ScenarioError: Unless exactly one known source kind is given
    """
    if not isinstance(source, dict) or len(source) != 1:
        raise ScenarioError("source must hold exactly one of " + ", ".join(SOURCE_KINDS))
    kind = next(iter(source))
    if kind not in SOURCE_KINDS:
        raise ScenarioError(f"unknown source kind {kind!r}")
    if kind == "random":
        params = source[kind]
        if not isinstance(params, dict):
            raise ScenarioError("random source takes an object")
        for key in ("max_numerator", "max_denominator"):
            value = params.get(key, 1)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ScenarioError(f"{key} must be a positive integer")
    elif not isinstance(source[kind], list):
        raise ScenarioError(f"{kind} source takes a list")
    return kind


def validate_geronimus(block: Any) -> None:
    """
    Validate the shift point and masses.

    Raises:
        ScenarioError: If the block is malformed
    """
    if not isinstance(block, dict) or "a" not in block or "masses" not in block:
        raise ScenarioError("geronimus must give a and masses")
    if not isinstance(block["masses"], list):
        raise ScenarioError("geronimus masses must be a list")


def validate_checks(checks: Any) -> List[str]:
    """
    Validate the requested check names.

    Returns:
        The names, in the given order
    """
    if not isinstance(checks, list) or not all(isinstance(c, str) for c in checks):
        raise ScenarioError("checks must be a list of names")
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ScenarioError(f"unknown checks: {', '.join(unknown)}")
    return list(checks)


def validate_scenario(data: Dict[str, Any]) -> None:
    """Validate a whole scenario document."""
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    for key in ("d", "N", "source"):
        if key not in data:
            raise ScenarioError(f"scenario is missing {key!r}")
    validate_degree(data["d"], data["N"])
    validate_source(data["source"])
    if "geronimus" in data:
        validate_geronimus(data["geronimus"])
    if "checks" in data:
        validate_checks(data["checks"])
    seed = data.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ScenarioError(f"seed must be an integer, got {seed!r}")
