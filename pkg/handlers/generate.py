"""
Generate command.

Builds the d-OPS of a scenario and writes its sequence, vector of
orthogonality and recurrence section.
"""

import logging
from pathlib import Path
from typing import Union

from artifacts.store import get_store
from handlers.common import build_base, load_scenario

logger = logging.getLogger(__name__)


async def cmd_generate(scenario_path: Union[str, Path]) -> None:
    """
    Write sequence.json, dual_vector.json and j_matrix.json.

    All three describe degrees 0..N: the sequence P_0..P_N, the recurrence
    rows 0..N-1 and, for matrix sources, moments up to x^N.

    Args:
        scenario_path: Scenario file
    """
    scenario = await load_scenario(scenario_path)
    base = build_base(scenario)
    store = get_store()

    vector = base.vector
    if scenario.source_kind != "moments":
        vector = vector.truncate(scenario.N)

    await store.write_json("sequence.json", base.sequence.truncate(scenario.N).to_dict())
    await store.write_json("dual_vector.json", vector.to_dict())
    await store.write_json("j_matrix.json", base.J.restrict(scenario.N).to_dict())
    logger.info(f"Generated d={scenario.d} sequence up to degree {scenario.N}")
