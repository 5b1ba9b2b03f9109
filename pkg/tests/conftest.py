"""
Shared fixtures: seeded generators, the worked 2×2 example and small ensembles
"""

import numpy as np
import pytest
from hypothesis import strategies as st

from spd_core import SpdMatrix, random_spd

EXAMPLE_A = [[1.0, 1.0], [1.0, 2.0]]
EXAMPLE_B = [[3.0, 1.0], [1.0, 2.0]]
EXAMPLE_MEAN = [[1.8495, 1.0449], [1.0449, 1.9857]]

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.integers(min_value=1, max_value=6)


def spd_pair(seed: int, dim: int) -> tuple[SpdMatrix, SpdMatrix]:
    rng = np.random.default_rng(seed)
    return random_spd(rng, dim), random_spd(rng, dim)


def spd_ensemble(seed: int, dim: int, m: int) -> tuple[list[SpdMatrix], np.ndarray]:
    rng = np.random.default_rng(seed)
    return [random_spd(rng, dim) for _ in range(m)], rng.uniform(0.5, 2.0, size=m)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def example_pair() -> tuple[SpdMatrix, SpdMatrix]:
    return SpdMatrix(np.array(EXAMPLE_A)), SpdMatrix(np.array(EXAMPLE_B))


@pytest.fixture
def commuting_pair() -> tuple[SpdMatrix, SpdMatrix]:
    return SpdMatrix(np.diag([1.0, 4.0])), SpdMatrix(np.diag([9.0, 16.0]))


@pytest.fixture
def ensemble(rng) -> list[SpdMatrix]:
    return [random_spd(rng, 3) for _ in range(4)]
