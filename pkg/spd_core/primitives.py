"""
Spectral primitives: square roots, Sylvester solves and polar factors
"""

import logging

import numpy as np

from .matrices import SpdMatrix, SymMatrix, as_psd, as_spd, as_sym, require_same_dim, symmetrize

logger = logging.getLogger(__name__)


def sqrt_psd(a) -> SpdMatrix:
    """
    Unique PSD square root of a PSD matrix

    Args:
        a: PSD matrix (SpdMatrix or array-like)

    Returns:
        SpdMatrix R with R·R = A, carrying the same definiteness flag as A
    """
    a = as_psd(a)
    return SpdMatrix(a.sqrt(), a.definiteness)


def sylvester_solve(a, y) -> SymMatrix:
    """
    Solve HA + AH = Y for symmetric H

    In the eigenbasis of A the solution is entrywise h_ij = y_ij / (α_i + α_j).
    """
    a = as_spd(a)
    y = as_sym(y)
    require_same_dim(a, y)

    q = a.spectrum.eigenvectors
    alphas = a.spectrum.eigenvalues
    y_tilde = q.T @ y.entries @ q
    h_tilde = y_tilde / (alphas[:, None] + alphas[None, :])
    return SymMatrix(symmetrize(q @ h_tilde @ q.T))


def polar_unitary(a, b) -> np.ndarray:
    """
    Orthogonal factor U of the polar decomposition B^{1/2}A^{1/2} = U (A^{1/2}BA^{1/2})^{1/2}

    U is the orthogonal matrix closest in the Procrustes sense: it minimizes
    ‖A^{1/2} − B^{1/2}U‖ over all orthogonal U.
    """
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)

    a_half = a.sqrt()
    b_half = b.sqrt()
    inner = SpdMatrix.psd(a_half @ b.entries @ a_half)
    u = b_half @ a_half @ inner.inv_sqrt()
    logger.debug(f"Polar factor orthogonality defect {np.linalg.norm(u.T @ u - np.eye(a.dim)):.3e}")
    return u
