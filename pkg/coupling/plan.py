"""
Optimal m-coupling of centered Gaussians through the barycentre
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from barycentre import BarycenterConfig, BarycenterSolution, barycenter, map_H_j
from spd_core import (
    RECON_TOL,
    NotConverged,
    ParamOutOfRange,
    SpdMatrix,
    Weights,
    as_spd,
    as_weights,
    frobenius,
    relative_error,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CouplingPlan:
    """
    Maps R_j = Ω^{-1} # A_j and the coupled tuple x_j = R_j R_1^{-1} x_1

    The coupled tuple maximizes E‖Σ w_j x_j‖², and the maximum is tr Ω.
    """

    matrices: tuple[SpdMatrix, ...]
    weights: Weights
    omega: SpdMatrix
    r_maps: tuple[SpdMatrix, ...]
    pair_maps: tuple[np.ndarray, ...]
    optimal_value: float
    solution: BarycenterSolution

    def identity_defect(self) -> float:
        """‖Σ w_j R_j − I‖_F"""
        total = np.zeros_like(self.omega.entries)
        for weight, r in zip(self.weights.values, self.r_maps, strict=True):
            total = total + weight * r.entries
        return frobenius(total - np.eye(self.omega.dim))

    def coupled_maps(self) -> tuple[np.ndarray, ...]:
        """R_j R_1^{-1} for every j, the first being the identity"""
        return (np.eye(self.omega.dim), *self.pair_maps)

    def pair_pushforward_residuals(self) -> list[float]:
        """‖(R_j R_1^{-1}) A_1 (R_j R_1^{-1})ᵀ − A_j‖_F / ‖A_j‖_F for j ≥ 2"""
        first = self.matrices[0].entries
        return [
            relative_error(p @ first @ p.T, m.entries) for p, m in zip(self.pair_maps, self.matrices[1:], strict=True)
        ]


def build_coupling(
    matrices: Sequence, weights=None, cfg: BarycenterConfig | None = None, recon_tol: float = RECON_TOL
) -> CouplingPlan:
    """
    Solve the m-coupling problem

    Args:
        matrices: PD covariances A_1, …, A_m
        weights: positive weights (uniform when None)
        cfg: barycentre solver settings
        recon_tol: tolerance on Σ w_j R_j = I

    Returns:
        CouplingPlan

    Raises:
        NotConverged: if the barycentre solve fails, or its fixed point is too inaccurate for Σ w_j R_j = I
    """
    spds = tuple(as_spd(m) for m in matrices)
    w = as_weights(weights, len(spds))
    solution = barycenter(spds, w, cfg)
    omega = solution.omega

    r_maps = tuple(map_H_j(omega, m) for m in spds)
    r1_inv = r_maps[0].inverse()
    pair_maps = tuple(r.entries @ r1_inv for r in r_maps[1:])

    plan = CouplingPlan(
        matrices=spds,
        weights=w,
        omega=omega,
        r_maps=r_maps,
        pair_maps=pair_maps,
        optimal_value=omega.trace,
        solution=solution,
    )

    defect = plan.identity_defect()
    if defect > recon_tol * np.sqrt(omega.dim):
        raise NotConverged(f"Σ w_j R_j deviates from I by {defect:.3e}; tighten the barycentre tolerance", solution)

    logger.info(f"Coupling built for m={len(spds)}: optimal value tr Ω = {plan.optimal_value!r}")
    return plan


def min_pairwise_spread(plan: CouplingPlan) -> float:
    """
    Minimum of E Σ_{i<j} ‖x_i − x_j‖² over couplings, for uniform weights

    Equals m Σ tr A_j − m² tr Ω.
    """
    if not plan.weights.is_uniform():
        raise ParamOutOfRange("The pairwise spread identity needs uniform weights")
    m = len(plan.matrices)
    return m * sum(a.trace for a in plan.matrices) - m * m * plan.optimal_value
