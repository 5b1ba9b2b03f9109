"""
Seeded random SPD, PSD and orthogonal matrices
"""

import numpy as np
from scipy.stats import ortho_group

from .errors import ParamOutOfRange
from .matrices import SpdMatrix, symmetrize


def random_orthogonal(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix"""
    if dim < 1:
        raise ParamOutOfRange(f"dim must be >= 1, got {dim}")
    if dim == 1:
        return np.array([[rng.choice([-1.0, 1.0])]])
    return ortho_group.rvs(dim, random_state=rng)


def random_spd(
    rng: np.random.Generator, dim: int, min_eig: float = 0.1, max_eig: float = 10.0
) -> SpdMatrix:
    """PD matrix with a random eigenbasis and log-uniform eigenvalues in [min_eig, max_eig]"""
    if not 0 < min_eig <= max_eig:
        raise ParamOutOfRange(f"Need 0 < min_eig <= max_eig, got {min_eig}, {max_eig}")
    q = random_orthogonal(rng, dim)
    eigenvalues = np.exp(rng.uniform(np.log(min_eig), np.log(max_eig), size=dim))
    return SpdMatrix(symmetrize((q * eigenvalues) @ q.T))


def random_psd(rng: np.random.Generator, dim: int, rank: int | None = None) -> SpdMatrix:
    """PSD matrix G Gᵀ with G of shape (dim, rank); full rank when rank is None"""
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise ParamOutOfRange(f"rank must lie in [1, {dim}], got {rank}")
    g = rng.standard_normal((dim, rank))
    return SpdMatrix.psd(symmetrize(g @ g.T))


def random_diagonal(rng: np.random.Generator, dim: int, min_eig: float = 0.1, max_eig: float = 10.0) -> SpdMatrix:
    return SpdMatrix(np.diag(np.exp(rng.uniform(np.log(min_eig), np.log(max_eig), size=dim))))
