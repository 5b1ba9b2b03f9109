"""
The Wasserstein barycentre and the maps and inequalities around it
"""

from spd_core import Weights, power_mean_half

from .maps import (
    FixedPointTerms,
    concavity_gap,
    fixed_point_terms,
    gradient_defect,
    map_H_j,
    map_K,
    objective,
    trace_inequality_gap,
    variance,
)
from .solver import (
    BarycenterConfig,
    BarycenterSolution,
    barycenter,
    eigenvalue_bounds_hold,
    restart_disagreement,
    two_point_barycenter,
)

__all__ = [
    "BarycenterConfig",
    "BarycenterSolution",
    "FixedPointTerms",
    "Weights",
    "barycenter",
    "concavity_gap",
    "eigenvalue_bounds_hold",
    "fixed_point_terms",
    "gradient_defect",
    "map_H_j",
    "map_K",
    "objective",
    "power_mean_half",
    "restart_disagreement",
    "trace_inequality_gap",
    "two_point_barycenter",
    "variance",
]
