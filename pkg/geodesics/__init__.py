"""
Geodesics, the Wasserstein mean, transport maps and the Riemannian metric
"""

from .metric import riemannian_inner, riemannian_inner_by_sylvester
from .path import DEFAULT_NODES, GeodesicPath, curve_length, evaluate, geodesic, wasserstein_mean
from .transport import TransportMap, transport_map
from .witnesses import HarmonicWitness, harmonic_bound_search, monotonicity_gap

__all__ = [
    "DEFAULT_NODES",
    "GeodesicPath",
    "HarmonicWitness",
    "TransportMap",
    "curve_length",
    "evaluate",
    "geodesic",
    "harmonic_bound_search",
    "monotonicity_gap",
    "riemannian_inner",
    "riemannian_inner_by_sylvester",
    "transport_map",
    "wasserstein_mean",
]
