"""
Envelope mapper for property suite reports
"""

from typing import Any

from .base import BaseEnvelopeMapper


def suite_to_envelope(entries: list[dict[str, Any]], summary: dict[str, Any]) -> dict[str, Any]:
    """Convert property suite entries and their summary to the `check` envelope"""
    return BaseEnvelopeMapper()._create_base_envelope("check", {"properties": entries, "summary": summary})
