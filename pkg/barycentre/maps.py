"""
The maps H_j and K driving the barycentre iteration, and the variance functional
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from bures_metric import bures_distance
from geodesics import transport_map
from spd_core import (
    RECON_TOL,
    SpdMatrix,
    Weights,
    as_psd,
    as_spd,
    as_weights,
    geometric_mean,
    relative_error,
    require_same_dim,
    symmetrize,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FixedPointTerms:
    """Σ w_j (S^{1/2} A_j S^{1/2})^{1/2} at a point S, with the roots of S it used"""

    point: SpdMatrix
    root_sum: np.ndarray
    trace_terms: np.ndarray

    def image(self) -> SpdMatrix:
        """K(S) = S^{-1/2} (Σ w_j (S^{1/2} A_j S^{1/2})^{1/2})² S^{-1/2}"""
        s_inv_half = self.point.inv_sqrt()
        return SpdMatrix(symmetrize(s_inv_half @ self.root_sum @ self.root_sum @ s_inv_half))

    def residual(self) -> float:
        """Relative defect of S = Σ w_j (S^{1/2} A_j S^{1/2})^{1/2}"""
        return relative_error(self.root_sum, self.point.entries)

    def stationarity(self) -> float:
        """‖I − S^{-1/2} (Σ w_j (S^{1/2} A_j S^{1/2})^{1/2}) S^{-1/2}‖_F, the gradient defect at S"""
        s_inv_half = self.point.inv_sqrt()
        return float(np.linalg.norm(np.eye(self.point.dim) - s_inv_half @ self.root_sum @ s_inv_half))


def _prepare(point, matrices: Sequence, weights) -> tuple[SpdMatrix, list[SpdMatrix], Weights]:
    point = as_spd(point)
    spds = [as_spd(m) for m in matrices]
    require_same_dim(point, *spds)
    return point, spds, as_weights(weights, len(spds))


def fixed_point_terms(point, matrices: Sequence, weights=None, workers: int = 1) -> FixedPointTerms:
    """
    Evaluate the m square-root terms at a point

    The terms may be computed on a thread pool; they are always reduced in
    ascending index order so the sum does not depend on the worker count.
    """
    point, spds, w = _prepare(point, matrices, weights)
    s_half = point.sqrt()

    def term(m: SpdMatrix) -> np.ndarray:
        return SpdMatrix.psd(s_half @ m.entries @ s_half).sqrt()

    if workers > 1 and len(spds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            roots = list(pool.map(term, spds))
    else:
        roots = [term(m) for m in spds]

    root_sum = np.zeros_like(point.entries)
    for weight, root in zip(w.values, roots, strict=True):
        root_sum = root_sum + weight * root
    traces = np.array([np.trace(root) for root in roots])
    return FixedPointTerms(point=point, root_sum=symmetrize(root_sum), trace_terms=traces)


def map_H_j(a, a_j) -> SpdMatrix:
    """H_j(A) = A^{-1} # A_j, the optimal transport map from A toward A_j"""
    return transport_map(a, a_j).matrix


def map_K(a, matrices: Sequence, weights=None, recon_tol: float = RECON_TOL, workers: int = 1) -> SpdMatrix:
    """
    K(A) = A^{-1/2} (Σ w_j (A^{1/2} A_j A^{1/2})^{1/2})² A^{-1/2}

    Cross-checked against the equivalent form H(A) A H(A) with H = Σ w_j H_j.
    """
    a, spds, w = _prepare(a, matrices, weights)
    image = fixed_point_terms(a, spds, w, workers=workers).image()

    h = np.zeros_like(a.entries)
    for weight, m in zip(w.values, spds, strict=True):
        h = h + weight * map_H_j(a, m).entries
    alternative = h @ a.entries @ h
    mismatch = relative_error(alternative, image.entries)
    if mismatch > recon_tol:
        logger.warning(f"K(A) forms disagree: relative mismatch {mismatch:.3e} exceeds {recon_tol:.1e}")
    return image


def variance(a, matrices: Sequence, weights=None) -> float:
    """V(A) = Σ w_j d²(A, A_j)"""
    a = as_psd(a)
    spds = [as_psd(m) for m in matrices]
    require_same_dim(a, *spds)
    w = as_weights(weights, len(spds))

    total = 0.0
    for weight, m in zip(w.values, spds, strict=True):
        total += weight * bures_distance(a, m).squared
    return float(total)


def objective(x, matrices: Sequence, weights=None) -> float:
    """The barycentre objective f(X) = Σ w_j d²(X, A_j)"""
    return variance(x, matrices, weights)


def gradient_defect(x, matrices: Sequence, weights=None) -> np.ndarray:
    """Df(X) = I − Σ w_j (A_j # X^{-1}); vanishes exactly at the barycentre"""
    x, spds, w = _prepare(x, matrices, weights)
    x_inv = SpdMatrix(x.inverse())

    total = np.zeros_like(x.entries)
    for weight, m in zip(w.values, spds, strict=True):
        total = total + weight * geometric_mean(m, x_inv).entries
    return np.eye(x.dim) - total


def trace_inequality_gap(a, matrices: Sequence, weights=None) -> float:
    """Σ w_j tr (A_j^{1/2} K(A) A_j^{1/2})^{1/2} − tr K(A), never negative"""
    a, spds, w = _prepare(a, matrices, weights)
    k = map_K(a, spds, w)

    total = 0.0
    for weight, m in zip(w.values, spds, strict=True):
        root = m.sqrt()
        total += weight * float(np.sum(np.sqrt(SpdMatrix.psd(root @ k.entries @ root).spectrum.eigenvalues)))
    return total - k.trace


def concavity_gap(x, y, alpha: float) -> float:
    """tr(αX + βY)^{1/2} − α tr X^{1/2} − β tr Y^{1/2} with β = 1 − α"""
    x = as_psd(x)
    y = as_psd(y)
    require_same_dim(x, y)
    beta = 1.0 - alpha
    mixed = SpdMatrix.psd(alpha * x.entries + beta * y.entries)
    return float(np.trace(mixed.sqrt()) - alpha * np.trace(x.sqrt()) - beta * np.trace(y.sqrt()))
