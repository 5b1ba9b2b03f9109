"""
Validated SPD matrix type and the spectral primitives the other modules build on
"""

from .errors import (
    BuresError,
    DimensionMismatch,
    InvalidProblem,
    NegativeDiscriminant,
    NotConverged,
    NotPd,
    NotPsd,
    ParamOutOfRange,
)
from .matrices import (
    PD_THRESHOLD_SCALE,
    RECON_TOL,
    Definiteness,
    SpdMatrix,
    SpectralDecomposition,
    SymMatrix,
    as_array,
    as_psd,
    as_spd,
    as_sym,
    frobenius,
    pd_threshold,
    relative_error,
    require_same_dim,
    symmetrize,
)
from .means import arithmetic_mean, geometric_mean, harmonic_mean, power_mean_half, weighted_geometric
from .order import loewner_gap, loewner_leq
from .primitives import polar_unitary, sqrt_psd, sylvester_solve
from .sampling import random_diagonal, random_orthogonal, random_psd, random_spd
from .weights import Weights, as_weights

__all__ = [
    "PD_THRESHOLD_SCALE",
    "RECON_TOL",
    "BuresError",
    "Definiteness",
    "DimensionMismatch",
    "InvalidProblem",
    "NegativeDiscriminant",
    "NotConverged",
    "NotPd",
    "NotPsd",
    "ParamOutOfRange",
    "SpdMatrix",
    "SpectralDecomposition",
    "SymMatrix",
    "Weights",
    "arithmetic_mean",
    "as_array",
    "as_psd",
    "as_spd",
    "as_sym",
    "as_weights",
    "frobenius",
    "geometric_mean",
    "harmonic_mean",
    "loewner_gap",
    "loewner_leq",
    "pd_threshold",
    "polar_unitary",
    "power_mean_half",
    "random_diagonal",
    "random_orthogonal",
    "random_psd",
    "random_spd",
    "relative_error",
    "require_same_dim",
    "sqrt_psd",
    "sylvester_solve",
    "symmetrize",
    "weighted_geometric",
]
