"""
Envelope mappers for coupling plans and Monte Carlo estimates
"""

import logging
from typing import Any

from coupling import CouplingPlan, McEstimate

from .barycenter_mapper import BarycenterEnvelopeMapper

logger = logging.getLogger(__name__)


def coupling_to_envelope(plan: CouplingPlan) -> dict[str, Any]:
    """Convert a CouplingPlan to the `couple` envelope"""
    return CouplingEnvelopeMapper().convert_plan(plan)


def estimate_to_envelope(estimate: McEstimate, kind: str, expected: float) -> dict[str, Any]:
    """
    Convert a Monte Carlo estimate to the `mc` envelope

    Args:
        estimate: Sample mean with its standard error, sample count and seed
        kind: Which quantity was estimated ("pair_cost" or "coupling_value")
        expected: Closed-form value the estimate converges to

    Returns:
        Envelope dictionary
    """
    return CouplingEnvelopeMapper().convert_estimate(estimate, kind, expected)


class CouplingEnvelopeMapper(BarycenterEnvelopeMapper):
    """Maps coupling results to envelopes"""

    def convert_plan(self, plan: CouplingPlan) -> dict[str, Any]:
        result = {
            "omega": plan.omega,
            "optimal_value": plan.optimal_value,
            "r_maps": list(plan.r_maps),
            "pair_maps": list(plan.pair_maps),
        }
        diagnostics = {
            "weights": plan.weights.values,
            "identity_defect": plan.identity_defect(),
            "pair_pushforward_residuals": plan.pair_pushforward_residuals(),
            "iterations": plan.solution.iterations,
            "residual": plan.solution.residual,
        }
        return self._create_base_envelope("couple", result, diagnostics)

    def convert_estimate(self, estimate: McEstimate, kind: str, expected: float) -> dict[str, Any]:
        z_score = abs(estimate.mean - expected) / estimate.std_error if estimate.std_error > 0 else 0.0
        diagnostics = {
            "kind": kind,
            "std_error": estimate.std_error,
            "samples": estimate.samples,
            "seed": estimate.seed,
            "expected": expected,
            "z_score": z_score,
            "within_3_sigma": estimate.within(expected),
        }
        logger.debug(f"Monte Carlo envelope: {kind} z={z_score:.3f}")
        return self._create_base_envelope("mc", estimate.mean, diagnostics)
