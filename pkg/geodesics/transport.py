"""
Optimal transport maps between centered Gaussians
"""

import logging
from dataclasses import dataclass

import numpy as np

from spd_core import SpdMatrix, as_spd, relative_error, require_same_dim, symmetrize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TransportMap:
    """The PD map T = A^{-1} # B pushing N(0, A) onto N(0, B)"""

    matrix: SpdMatrix
    source: SpdMatrix
    target: SpdMatrix

    def pushforward_residual(self) -> float:
        """‖TAT − B‖_F / ‖B‖_F"""
        t = self.matrix.entries
        return relative_error(t @ self.source.entries @ t, self.target.entries)


def transport_map(a, b) -> TransportMap:
    """
    Optimal linear map from covariance A to covariance B

    T = A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}, which equals A^{-1} # B.
    """
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)

    if np.array_equal(a.entries, b.entries):
        return TransportMap(matrix=SpdMatrix(np.eye(a.dim)), source=a, target=b)

    a_half = a.sqrt()
    a_inv_half = a.inv_sqrt()
    middle = SpdMatrix.psd(a_half @ b.entries @ a_half).sqrt()
    t = SpdMatrix(symmetrize(a_inv_half @ middle @ a_inv_half))

    plan = TransportMap(matrix=t, source=a, target=b)
    logger.debug(f"Transport map pushforward residual {plan.pushforward_residual():.3e}")
    return plan
