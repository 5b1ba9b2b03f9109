"""
Base envelope mapper with the shared conversion and serialization steps
"""

import json
import logging
import math
from typing import Any

import numpy as np

from result_schema import SCHEMA_VERSION, validate_envelope
from spd_core import BuresError

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 17


class BaseEnvelopeMapper:
    """Base class for mapping results to ResultEnvelope dictionaries"""

    def _plain(self, value: Any) -> Any:
        """
        Convert numpy scalars, arrays and matrix types to plain Python values

        Args:
            value: Value to convert

        Returns:
            JSON-compatible value
        """
        if hasattr(value, "entries"):
            return self._plain(value.entries)
        if isinstance(value, np.ndarray):
            return value.tolist()
        if isinstance(value, np.bool_):
            return bool(value)
        if isinstance(value, np.integer):
            return int(value)
        if isinstance(value, np.floating):
            return float(value)
        if isinstance(value, dict):
            return {str(k): self._plain(v) for k, v in value.items()}
        if isinstance(value, list | tuple):
            return [self._plain(v) for v in value]
        return value

    def _create_base_envelope(
        self, command: str, result: Any, diagnostics: dict[str, Any] | None = None
    ) -> dict[str, Any]:
        """
        Create the envelope structure

        Args:
            command: Subcommand that produced the result
            result: Matrix, scalar or structured result
            diagnostics: Optional solver or sampler diagnostics

        Returns:
            Envelope dictionary
        """
        envelope = {"command": command, "result": self._plain(result)}
        if diagnostics:
            envelope["diagnostics"] = self._plain(diagnostics)
        envelope["schema_version"] = SCHEMA_VERSION

        problems = validate_envelope(envelope)
        if problems:
            logger.warning(f"Envelope for {command} does not match the schema: {problems}")
        return envelope


def error_to_envelope(
    command: str, error: BuresError, diagnostics: dict[str, Any] | None = None
) -> dict[str, Any]:
    """Envelope carrying a machine-readable error instead of a result, with optional partial diagnostics"""
    envelope = {"command": command, "error": error.to_dict()}
    if diagnostics:
        envelope["diagnostics"] = BaseEnvelopeMapper()._plain(diagnostics)
    envelope["schema_version"] = SCHEMA_VERSION
    return envelope


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        return "null"
    text = format(value, f".{SIGNIFICANT_DIGITS}g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def _dump(value: Any, out: list[str]) -> None:
    if value is None or isinstance(value, bool):
        out.append(json.dumps(value))
    elif isinstance(value, float):
        out.append(_format_float(value))
    elif isinstance(value, int | str):
        out.append(json.dumps(value))
    elif isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _dump(item, out)
        out.append("}")
    elif isinstance(value, list | tuple):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _dump(item, out)
        out.append("]")
    else:
        raise TypeError(f"Cannot serialize {type(value).__name__}")


def dumps_envelope(envelope: dict[str, Any]) -> str:
    """
    Serialize an envelope as one line of JSON with every float at 17 significant digits

    Seventeen digits identify a binary64 value exactly, so reading the text back
    recovers the same floats.
    """
    out: list[str] = []
    _dump(envelope, out)
    return "".join(out)
