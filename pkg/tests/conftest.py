import json
import random
from dataclasses import dataclass
from typing import List

import pytest

from algebra.banded import BandedHessenberg
from engine.duality import dual_functional_vector
from engine.recurrence import generate_sequence, recurrence_from_sequence
from engine.sequence import DOPSequence
from functionals.moments import FunctionalVector
from geronimus.models import GeronimusConfig, TransformLevel
from geronimus.regularity import transform_level
from utils.instances import random_hessenberg, random_scalar


def chebyshev_like(size: int) -> BandedHessenberg:
    """d = 1, diagonal 0, subdiagonal 1/4."""
    return BandedHessenberg(1, [["0"]] + [["0", "1/4"] for _ in range(size - 1)])


def cubic_example(size: int) -> BandedHessenberg:
    """d = 2, a_{n,n-2} = 1 and every other coefficient 0."""
    rows = []
    for n in range(size):
        row = ["0"] * (min(n, 2) + 1)
        if n >= 2:
            row[2] = "1"
        rows.append(row)
    return BandedHessenberg(2, rows)


@dataclass
class Pipeline:
    J: BandedHessenberg
    base: DOPSequence
    vector: FunctionalVector
    config: GeronimusConfig
    levels: List[TransformLevel]

    @property
    def sequences(self) -> List[DOPSequence]:
        return [level.sequence for level in self.levels]

    @property
    def J_levels(self) -> List[BandedHessenberg]:
        return [recurrence_from_sequence(s) for s in self.sequences]


def run_pipeline(J: BandedHessenberg, a, masses, N: int) -> Pipeline:
    """Levels 0..d, each built to degree N+1."""
    top = N + 1
    base = generate_sequence(J, top)
    vector = dual_functional_vector(base, top)
    config = GeronimusConfig.create(a, masses)
    levels = [transform_level(vector, base, config, m, top) for m in range(J.d + 1)]
    return Pipeline(J, base, vector, config, levels)


def random_pipeline(d: int, N: int, seed: int) -> Pipeline:
    rng = random.Random(seed)
    J = random_hessenberg(d, N + 1, rng)
    a = random_scalar(rng, nonzero=True)
    masses = [random_scalar(rng, nonzero=True) for _ in range(d)]
    return run_pipeline(J, a, masses, N)


@pytest.fixture
def classical():
    """The hand-checkable d = 1 instance: a = 1, M_1 = -2."""
    return run_pipeline(chebyshev_like(12), 1, [-2], 10)


@pytest.fixture
def write_scenario(tmp_path):
    def write(data, name="scenario.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path
    return write
