"""
Exception hierarchy shared by every package.

Each error carries the process exit code the CLI reports for it and a
``details()`` mapping that becomes the stderr JSON diagnostic.
"""

from typing import Any, Dict, List


class DOPSError(Exception):
    """Base class for all library errors."""

    exit_code: int = 1

    def details(self) -> Dict[str, Any]:
        """
        Describe the error as a JSON-ready mapping.

        Returns:
            Mapping with the error name, message and any index fields
        """
        return {"error": type(self).__name__, "message": str(self)}


class BadShape(DOPSError):
    """Structurally malformed input (wrong lengths, missing unit diagonal, ...)."""


class InvalidScalar(BadShape):
    """A value that cannot be read as an exact rational."""


class ScenarioError(DOPSError):
    """Scenario document rejected by validation."""


class HorizonExceeded(DOPSError):
    """Not enough moments to form a requested pairing."""

    def __init__(self, required: int, horizon: int):
        super().__init__(f"moments up to x^{required} needed, horizon is {horizon}")
        self.required = required
        self.horizon = horizon

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "required": self.required, "horizon": self.horizon}


class WindowTooLarge(DOPSError):
    """A product window that truncation of the stored sections would contaminate."""

    def __init__(self, window: int, limit: int):
        super().__init__(f"window {window} exceeds the safe limit {limit}")
        self.window = window
        self.limit = limit

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "window": self.window, "limit": self.limit}


class RegularityFailure(DOPSError):
    """The vector of functionals admits no monic d-OPS at degree ``n``."""

    exit_code = 2

    def __init__(self, n: int, message: str = ""):
        super().__init__(message or f"vector is not regular at degree {n}")
        self.n = n

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "n": self.n}


class DegeneracyFailure(RegularityFailure):
    """A pairing <u_j, x^m P_n> that must be nonzero vanishes."""

    def __init__(self, n: int, j: int, m: int):
        super().__init__(n, f"<u_{j}, x^{m} P_{n}> vanishes")
        self.j = j
        self.m = m

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "j": self.j, "m": self.m}


class ChainBroken(DOPSError):
    """The bidiagonal chain cannot be built or checked at level ``m``."""

    exit_code = 2

    def __init__(self, m: int, reason: str = ""):
        super().__init__(f"chain broken at level {m}" + (f": {reason}" if reason else ""))
        self.m = m

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "m": self.m}


class BandStructureError(DOPSError):
    """A matrix entry violates the expected band structure."""

    exit_code = 3


class BandViolation(BandStructureError):
    """Nonzero coefficient at (n, k) outside the allowed band."""

    def __init__(self, n: int, k: int):
        super().__init__(f"nonzero coefficient outside the band at ({n}, {k})")
        self.n = n
        self.k = k

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "n": self.n, "k": self.k}


class ZeroLowBand(BandStructureError):
    """Recurrence coefficient a_{n,n-d} vanishes."""

    def __init__(self, n: int):
        super().__init__(f"a_({n},{n}-d) is zero")
        self.n = n

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "n": self.n}


class ZeroEdgeBand(BandStructureError):
    """Outermost band entry of a connection matrix vanishes in row ``n``."""

    def __init__(self, n: int):
        super().__init__(f"edge band entry of row {n} is zero")
        self.n = n

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "n": self.n}


class ZeroAtShift(DOPSError):
    """P^(d)_n(a) = 0, which no regular chain allows."""

    exit_code = 4

    def __init__(self, n: int):
        super().__init__(f"P^(d)_{n} vanishes at the shift point")
        self.n = n

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "n": self.n}


class VerificationFailed(DOPSError):
    """One or more matrix identities failed on the checked window."""

    exit_code = 4

    def __init__(self, failures: List[Dict[str, Any]]):
        names = ", ".join(f["identity"] for f in failures)
        super().__init__(f"identities failed: {names}")
        self.failures = failures

    def details(self) -> Dict[str, Any]:
        return {**super().details(), "failures": self.failures}
