"""
Envelope mapper for commands whose result is a single matrix
"""

from typing import Any

from spd_core import SpdMatrix

from .base import BaseEnvelopeMapper


def matrix_to_envelope(command: str, matrix: SpdMatrix, diagnostics: dict[str, Any] | None = None) -> dict[str, Any]:
    """Convert a matrix result (`mean`, `geodesic`) to an envelope"""
    return BaseEnvelopeMapper()._create_base_envelope(command, matrix, diagnostics)
