"""
Bures-Wasserstein distance, fidelity and comparison distances
"""

from .distance import DistanceReport, affine_invariant_delta, bures_distance, fidelity, hellinger
from .variational import CheckReport, ClauseResult, fidelity_variational_check

__all__ = [
    "CheckReport",
    "ClauseResult",
    "DistanceReport",
    "affine_invariant_delta",
    "bures_distance",
    "fidelity",
    "fidelity_variational_check",
    "hellinger",
]
