"""
Scenario documents driving a pipeline run.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra.errors import DOPSError, ScenarioError
from geronimus.models import GeronimusConfig
from utils.validators import CHECKS, validate_scenario, validate_source


@dataclass
class Scenario:
    """
    One run: band parameter, degree, where the d-OPS comes from and which
    Geronimus chain to apply.

    ``source`` is the raw payload of the chosen kind: Hessenberg bands,
    per-functional moment lists, or the random-instance parameters.
    """

    d: int
    N: int
    source_kind: str
    source: Any
    geronimus: Optional[GeronimusConfig] = None
    checks: List[str] = field(default_factory=lambda: list(CHECKS))
    seed: int = 0

    def require_geronimus(self) -> GeronimusConfig:
        if self.geronimus is None:
            raise ScenarioError("scenario has no geronimus block")
        return self.geronimus

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "d": self.d,
            "N": self.N,
            "source": {self.source_kind: self.source},
            "checks": list(self.checks),
            "seed": self.seed,
        }
        if self.geronimus is not None:
            data["geronimus"] = self.geronimus.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Scenario":
        """
        Build a scenario from its JSON document.

        Raises:
            ScenarioError: If the document is invalid
        """
        validate_scenario(data)
        kind = validate_source(data["source"])
        geronimus = None
        if "geronimus" in data:
            try:
                geronimus = GeronimusConfig.create(data["geronimus"]["a"], data["geronimus"]["masses"])
                geronimus.require_d(data["d"])
            except DOPSError as e:
                raise ScenarioError(f"invalid geronimus block: {e}") from e
        return cls(
            d=data["d"],
            N=data["N"],
            source_kind=kind,
            source=data["source"][kind],
            geronimus=geronimus,
            checks=list(data.get("checks", CHECKS)),
            seed=data.get("seed", 0),
        )
