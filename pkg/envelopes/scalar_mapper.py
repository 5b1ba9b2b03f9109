"""
Envelope mappers for scalar results: distances and fidelities
"""

import logging
from typing import Any

from bures_metric import DistanceReport

from .base import BaseEnvelopeMapper

logger = logging.getLogger(__name__)


def distance_to_envelope(report: DistanceReport, hellinger: float | None = None) -> dict[str, Any]:
    """
    Convert a DistanceReport to the `dist` envelope

    Args:
        report: Distance computation with its fidelity and traces
        hellinger: Optional Hellinger distance of the same pair, reported alongside

    Returns:
        Envelope dictionary
    """
    return ScalarEnvelopeMapper().convert_distance(report, hellinger)


def fidelity_to_envelope(value: float, report: DistanceReport | None = None) -> dict[str, Any]:
    """Convert a fidelity value to the `fidelity` envelope"""
    return ScalarEnvelopeMapper().convert_fidelity(value, report)


class ScalarEnvelopeMapper(BaseEnvelopeMapper):
    """Maps scalar results to envelopes"""

    def convert_distance(self, report: DistanceReport, hellinger: float | None = None) -> dict[str, Any]:
        diagnostics = {
            "squared": report.squared,
            "fidelity": report.fidelity,
            "trace_a": report.trace_a,
            "trace_b": report.trace_b,
        }
        if hellinger is not None:
            diagnostics["hellinger"] = hellinger
        logger.debug(f"Distance envelope: d={report.d!r}")
        return self._create_base_envelope("dist", report.d, diagnostics)

    def convert_fidelity(self, value: float, report: DistanceReport | None = None) -> dict[str, Any]:
        diagnostics = None
        if report is not None:
            diagnostics = {"distance": report.d, "trace_a": report.trace_a, "trace_b": report.trace_b}
        return self._create_base_envelope("fidelity", value, diagnostics)
