"""
Envelope mappers for converting results to the published JSON envelope
"""

from .barycenter_mapper import barycenter_to_envelope, solution_diagnostics
from .base import dumps_envelope, error_to_envelope
from .coupling_mapper import coupling_to_envelope, estimate_to_envelope
from .matrix_mapper import matrix_to_envelope
from .scalar_mapper import distance_to_envelope, fidelity_to_envelope
from .suite_mapper import suite_to_envelope

__all__ = [
    "barycenter_to_envelope",
    "coupling_to_envelope",
    "distance_to_envelope",
    "dumps_envelope",
    "error_to_envelope",
    "estimate_to_envelope",
    "fidelity_to_envelope",
    "matrix_to_envelope",
    "solution_diagnostics",
    "suite_to_envelope",
]
