"""
Two-variable and multivariable matrix means
"""

import logging
from collections.abc import Sequence

import numpy as np

from .errors import ParamOutOfRange
from .matrices import SpdMatrix, as_spd, require_same_dim, symmetrize
from .weights import Weights, as_weights

logger = logging.getLogger(__name__)


def weighted_geometric(a, b, t: float) -> SpdMatrix:
    """
    A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}

    The point at parameter t on the affine-invariant geodesic from A to B.
    """
    if not 0.0 <= t <= 1.0:
        raise ParamOutOfRange(f"t must lie in [0, 1], got {t}")
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)

    a_half = a.sqrt()
    a_inv_half = a.inv_sqrt()
    inner = SpdMatrix.psd(a_inv_half @ b.entries @ a_inv_half)
    return SpdMatrix(symmetrize(a_half @ inner.power(t) @ a_half))


def geometric_mean(a, b) -> SpdMatrix:
    """A # B, the unique PD solution X of X A^{-1} X = B"""
    return weighted_geometric(a, b, 0.5)


def arithmetic_mean(matrices: Sequence, weights: Weights | Sequence[float] | None = None) -> SpdMatrix:
    """Σ w_j A_j, summed in ascending index order"""
    spds = [as_spd(m) for m in matrices]
    require_same_dim(*spds)
    w = as_weights(weights, len(spds))

    total = np.zeros_like(spds[0].entries)
    for weight, m in zip(w.values, spds, strict=True):
        total = total + weight * m.entries
    return SpdMatrix(total)


def harmonic_mean(a, b) -> SpdMatrix:
    """((A^{-1} + B^{-1}) / 2)^{-1}"""
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)
    return SpdMatrix(SpdMatrix(0.5 * (a.inverse() + b.inverse())).inverse())


def power_mean_half(matrices: Sequence, weights: Weights | Sequence[float] | None = None) -> SpdMatrix:
    """
    Power mean Q_{1/2} = (Σ w_j A_j^{1/2})²

    Coincides with the Wasserstein barycentre when the A_j commute.
    """
    spds = [as_spd(m) for m in matrices]
    require_same_dim(*spds)
    w = as_weights(weights, len(spds))

    root_sum = np.zeros_like(spds[0].entries)
    for weight, m in zip(w.values, spds, strict=True):
        root_sum = root_sum + weight * m.sqrt()
    return SpdMatrix(symmetrize(root_sum @ root_sum))
