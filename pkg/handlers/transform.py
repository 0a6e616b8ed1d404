"""
Transform command.

Builds level m of the Geronimus chain, writes it together with the
forbidden masses of every step up to m, and checks the transformed
sequence against its vector.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from algebra.errors import RegularityFailure, ScenarioError, VerificationFailed
from algebra.scalars import format_scalar
from artifacts.store import get_store
from engine.orthogonality import verify_orthogonality
from geronimus.models import TransformLevel
from geronimus.regularity import forbidden_mass_witnesses
from handlers.common import build_base, build_levels, load_scenario

logger = logging.getLogger(__name__)


def forbidden_steps(levels: List[TransformLevel], top: int) -> List[Dict[str, Any]]:
    """
    Excluded masses of each step k -> k+1, computed from level k.

    Stops at the first level that has no sequence.
    """
    steps = []
    for k in range(len(levels) - 1):
        level = levels[k]
        if level.sequence is None:
            logger.warning(f"Level {k} is not regular, forbidden masses of later steps are skipped")
            break
        cfg = level.config
        witnesses = forbidden_mass_witnesses(level.vector, level.sequence, cfg.a, range(1, top + 1))
        configured = cfg.mass(k + 1)
        steps.append({
            "step": k + 1,
            "mass": f"M_{k + 1}",
            "configured": format_scalar(configured),
            "witness": witnesses.get(configured),
            "forbidden": [{"mass": format_scalar(mass), "n": n} for mass, n in witnesses.items()],
        })
    return steps


async def cmd_transform(scenario_path: Union[str, Path], m: int) -> None:
    """
    Write level_{m}.json and forbidden_masses.json.

    Args:
        scenario_path: Scenario file
        m: Level, 1..d

    Raises:
        RegularityFailure: If some d^(m)_n vanishes, with the first such n
        VerificationFailed: If the transformed sequence is not d-orthogonal
            with respect to the transformed vector
    """
    scenario = await load_scenario(scenario_path)
    if not 1 <= m <= scenario.d:
        raise ScenarioError(f"level must lie in 1..{scenario.d}, got {m}")
    base = build_base(scenario)
    levels = build_levels(scenario, base, m)
    store = get_store()

    await store.write_json("forbidden_masses.json", forbidden_steps(levels, scenario.N + 1))
    level = levels[m]
    await store.write_json(f"level_{m}.json", level.to_dict())

    first = level.first_vanishing()
    if first is not None:
        raise RegularityFailure(first, f"d^({m})_{first} vanishes")

    report = verify_orthogonality(level.vector, level.sequence)
    if not report.passed:
        raise VerificationFailed([{
            "identity": f"orthogonality[m={m}]",
            "mismatches": [c.to_dict() for c in report.failures],
        }])
    logger.info(f"Level {m} is regular and passes {len(report.checks)} orthogonality checks")
