"""
The Bures-Wasserstein geodesic and the Wasserstein mean
"""

import logging
from dataclasses import dataclass

import numpy as np

from spd_core import ParamOutOfRange, SpdMatrix, SymMatrix, as_spd, require_same_dim, symmetrize

from .metric import riemannian_inner
from .transport import transport_map

logger = logging.getLogger(__name__)

DEFAULT_NODES = 64


@dataclass(frozen=True, eq=False)
class GeodesicPath:
    """
    γ(t) = (1−t)²A + t²B + t(1−t)[(AB)^{1/2} + (BA)^{1/2}]

    The cross term is formed once from the transport map T = A^{-1} # B as
    AT + TA, never from the non-symmetric product AB.
    """

    a: SpdMatrix
    b: SpdMatrix
    cross_term: SymMatrix

    def evaluate(self, t: float) -> SpdMatrix:
        _check_unit_interval(t)
        if t == 0.0:
            return self.a
        if t == 1.0:
            return self.b
        s = 1.0 - t
        return SpdMatrix(s * s * self.a.entries + t * t * self.b.entries + t * s * self.cross_term.entries)

    def derivative(self, t: float) -> SymMatrix:
        """γ′(t) = −2(1−t)A + 2tB + (1−2t)·cross_term"""
        _check_unit_interval(t)
        return SymMatrix(
            -2.0 * (1.0 - t) * self.a.entries + 2.0 * t * self.b.entries + (1.0 - 2.0 * t) * self.cross_term.entries
        )


def _check_unit_interval(t: float) -> None:
    if not 0.0 <= t <= 1.0:
        raise ParamOutOfRange(f"t must lie in [0, 1], got {t}")


def geodesic(a, b) -> GeodesicPath:
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)

    # (AB)^{1/2} = A(A^{-1} # B) and (BA)^{1/2} is its transpose
    root_ab = a.entries @ transport_map(a, b).matrix.entries
    return GeodesicPath(a=a, b=b, cross_term=SymMatrix(symmetrize(root_ab + root_ab.T)))


def evaluate(path: GeodesicPath, t: float) -> SpdMatrix:
    return path.evaluate(t)


def wasserstein_mean(a, b) -> SpdMatrix:
    """A ◇ B = ¼(A + B + (AB)^{1/2} + (BA)^{1/2}), the geodesic midpoint"""
    return geodesic(a, b).evaluate(0.5)


def curve_length(path: GeodesicPath, nodes: int = DEFAULT_NODES, panels: int = 1) -> float:
    """
    Length ∫₀¹ ⟨γ′(t), γ′(t)⟩_{γ(t)}^{1/2} dt by composite Gauss–Legendre quadrature

    Args:
        path: geodesic to measure
        nodes: Gauss–Legendre points per panel
        panels: number of equal subintervals of [0, 1]

    Returns:
        Approximate curve length, which equals d(A,B) for the geodesic
    """
    if nodes < 2:
        raise ParamOutOfRange(f"nodes must be >= 2, got {nodes}")
    if panels < 1:
        raise ParamOutOfRange(f"panels must be >= 1, got {panels}")

    points, weights = np.polynomial.legendre.leggauss(nodes)
    width = 1.0 / panels

    total = 0.0
    for panel in range(panels):
        left = panel * width
        for x, w in zip(points, weights, strict=True):
            t = left + 0.5 * width * (x + 1.0)
            velocity = path.derivative(t)
            speed_sq = riemannian_inner(path.evaluate(t), velocity, velocity)
            total += 0.5 * width * w * np.sqrt(max(speed_sq, 0.0))

    logger.debug(f"Curve length with {panels}x{nodes} nodes: {total!r}")
    return float(total)
