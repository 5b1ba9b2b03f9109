"""
Seeded random ensembles for running the property suites without input
"""

import logging

import numpy as np

from spd_core import random_spd

from .problem_file import ProblemFile

logger = logging.getLogger(__name__)

MIN_DIM = 2
MAX_DIM = 6
MIN_MATRICES = 2
MAX_MATRICES = 5


def random_ensembles(trials: int, seed: int = 0) -> list[ProblemFile]:
    """
    Draw `trials` ensembles with dims 2-6, 2-5 matrices and random positive weights

    Trial k draws from SeedSequence(seed, spawn_key=(k,)), so adding trials never
    changes the earlier ones.
    """
    ensembles = []
    for trial in range(trials):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))
        dim = int(rng.integers(MIN_DIM, MAX_DIM + 1))
        m = int(rng.integers(MIN_MATRICES, MAX_MATRICES + 1))
        matrices = [random_spd(rng, dim) for _ in range(m)]
        weights = rng.uniform(0.5, 2.0, size=m)
        ensembles.append(ProblemFile.of(matrices, weights))
    logger.info(f"Drew {trials} random ensembles from seed {seed}")
    return ensembles
