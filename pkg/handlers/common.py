"""
Pipeline steps shared by the commands.

Every command starts from the same base: the level-0 sequence built to
degree N+1, its vector of orthogonality and its recurrence section.
"""

import logging
import random
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from algebra.banded import BandedHessenberg
from algebra.errors import BadShape, ScenarioError
from artifacts.models import Scenario
from artifacts.store import read_json
from engine.duality import dual_functional_vector, sequence_from_functionals
from engine.recurrence import generate_sequence, recurrence_from_sequence
from engine.sequence import DOPSequence
from functionals.moments import FunctionalVector
from geronimus.models import TransformLevel
from geronimus.regularity import transform_level
from utils.instances import random_hessenberg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Base:
    """Level-0 data of a scenario."""

    J: BandedHessenberg
    sequence: DOPSequence
    vector: FunctionalVector


async def load_scenario(path: Union[str, Path]) -> Scenario:
    """
    Read and validate a scenario file.

    Raises:
        ScenarioError: If the document is invalid
        OSError: If the file cannot be read
    """
    data = await read_json(path)
    scenario = Scenario.from_dict(data)
    logger.info(f"Loaded scenario {path}: d={scenario.d}, N={scenario.N}, source={scenario.source_kind}")
    return scenario


def _hessenberg_source(scenario: Scenario, rows: int) -> BandedHessenberg:
    if scenario.source_kind == "random":
        params = scenario.source
        rng = random.Random(scenario.seed)
        return random_hessenberg(
            scenario.d,
            rows,
            rng,
            params.get("max_numerator", 9),
            params.get("max_denominator", 7),
        )
    J = BandedHessenberg(scenario.d, scenario.source)
    if J.size < rows:
        raise ScenarioError(f"hessenberg source has {J.size} rows, {rows} needed for N = {scenario.N}")
    return J.restrict(rows)


def build_base(scenario: Scenario) -> Base:
    """
    Level-0 sequence to degree N+1 with its vector and recurrence section.

    Matrix sources run the recurrence and take the dual vector; a moment
    source is solved for its sequence.

    Raises:
        RegularityFailure: If a moment source is not regular
        BandStructureError: If the recovered recurrence is malformed
    """
    top = scenario.N + 1
    if scenario.source_kind == "moments":
        vector = FunctionalVector.from_dict(scenario.source)
        if vector.d != scenario.d:
            raise BadShape(f"moments source carries {vector.d} functionals, d = {scenario.d}")
        sequence = sequence_from_functionals(vector, top)
        J = recurrence_from_sequence(sequence)
    else:
        J = _hessenberg_source(scenario, top)
        sequence = generate_sequence(J, top)
        vector = dual_functional_vector(sequence, top)
    return Base(J, sequence, vector)


def build_levels(scenario: Scenario, base: Base, last: int) -> List[TransformLevel]:
    """Levels 0..last of the Geronimus chain, each to degree N+1."""
    cfg = scenario.require_geronimus()
    top = scenario.N + 1
    return [transform_level(base.vector, base.sequence, cfg, m, top) for m in range(last + 1)]


def level_sequences(levels: List[TransformLevel]) -> List[Optional[DOPSequence]]:
    return [level.sequence for level in levels]
