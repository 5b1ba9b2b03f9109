"""
Order-theoretic witnesses for the Wasserstein mean
"""

import logging
from dataclasses import dataclass

import numpy as np

from spd_core import SpdMatrix, harmonic_mean, loewner_gap, random_spd

from .path import wasserstein_mean

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HarmonicWitness:
    """A pair for which the harmonic mean is not below the Wasserstein mean"""

    trial: int
    a: SpdMatrix
    b: SpdMatrix
    gap: float


def monotonicity_gap(a, b) -> float:
    """
    Smallest eigenvalue of A ◇ B − A

    A negative value certifies that A ≤ A ◇ B fails, and with it the
    monotonicity of the mean in its first argument.
    """
    return loewner_gap(a, wasserstein_mean(a, b))


def harmonic_bound_search(trials: int = 1000, seed: int = 0, slack: float = 1e-12) -> HarmonicWitness | None:
    """
    Look for 2×2 PD pairs violating ((A^{-1} + B^{-1})/2)^{-1} ≤ A ◇ B

    The bound fails for some pairs but not for most, so this returns the first
    violation found, or None. Not finding one is not an error.
    """
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        a = random_spd(rng, 2, min_eig=0.01, max_eig=100.0)
        b = random_spd(rng, 2, min_eig=0.01, max_eig=100.0)
        gap = loewner_gap(harmonic_mean(a, b), wasserstein_mean(a, b))
        if gap < -slack:
            logger.info(f"Harmonic lower bound violated at trial {trial} (gap {gap:.3e})")
            return HarmonicWitness(trial=trial, a=a, b=b, gap=gap)

    logger.info(f"No harmonic lower bound violation in {trials} trials")
    return None
