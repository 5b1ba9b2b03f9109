"""
Optimal m-coupling of Gaussians and the seeded Monte Carlo harness that checks it
"""

from .monte_carlo import (
    CovarianceCheck,
    McEstimate,
    mc_coupling_value,
    mc_covariance_check,
    mc_map_cost,
    mc_orbit_cost,
    mc_pair_cost,
    mc_pairwise_spread,
)
from .plan import CouplingPlan, build_coupling, min_pairwise_spread
from .streams import DEFAULT_CHUNK_SIZE, ChunkStats, run_chunks, substream

__all__ = [
    "DEFAULT_CHUNK_SIZE",
    "ChunkStats",
    "CouplingPlan",
    "CovarianceCheck",
    "McEstimate",
    "build_coupling",
    "mc_coupling_value",
    "mc_covariance_check",
    "mc_map_cost",
    "mc_orbit_cost",
    "mc_pair_cost",
    "mc_pairwise_spread",
    "min_pairwise_spread",
    "run_chunks",
    "substream",
]
