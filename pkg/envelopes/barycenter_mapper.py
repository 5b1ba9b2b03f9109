"""
Envelope mapper for barycentre solutions
"""

import logging
from typing import Any

from barycentre import BarycenterSolution
from spd_core import Weights

from .base import BaseEnvelopeMapper

logger = logging.getLogger(__name__)


def barycenter_to_envelope(solution: BarycenterSolution, weights: Weights) -> dict[str, Any]:
    """
    Convert a BarycenterSolution to the `barycenter` envelope

    Args:
        solution: Converged (or partial) fixed-point solution
        weights: Normalized weights the solve used

    Returns:
        Envelope dictionary
    """
    return BarycenterEnvelopeMapper().convert(solution, weights)


def solution_diagnostics(solution: BarycenterSolution) -> dict[str, Any]:
    """Solver diagnostics alone, for reporting a partial solution next to an error"""
    return BarycenterEnvelopeMapper()._solver_diagnostics(solution)


class BarycenterEnvelopeMapper(BaseEnvelopeMapper):
    """Maps barycentre solutions to envelopes"""

    def convert(self, solution: BarycenterSolution, weights: Weights) -> dict[str, Any]:
        diagnostics = self._solver_diagnostics(solution)
        diagnostics["weights"] = weights.values
        return self._create_base_envelope("barycenter", solution.omega, diagnostics)

    def _solver_diagnostics(self, solution: BarycenterSolution) -> dict[str, Any]:
        return {
            "iterations": solution.iterations,
            "converged": solution.converged,
            "residual": solution.residual,
            "stationarity_defect": solution.stationarity_defect,
            "ill_conditioned": solution.ill_conditioned,
            "trace_sequence": solution.trace_sequence,
            "variance_sequence": solution.variance_sequence,
            "step_distances": solution.step_distances,
            "trace_monotone": solution.trace_monotone(),
            "variance_monotone": solution.variance_monotone(),
        }
