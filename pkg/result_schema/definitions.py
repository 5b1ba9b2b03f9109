"""
Schema documents for the problem file and the result envelope, and validation against them
"""

import math
from typing import Any

from jsonschema import Draft202012Validator
from jsonschema.exceptions import ValidationError

SCHEMA_VERSION = 1

COMMANDS = ("dist", "fidelity", "mean", "geodesic", "barycenter", "couple", "mc", "check")

_MATRIX = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": {"type": "number"}},
}

# Unknown top-level keys are tolerated (the loader logs them); squareness, equal
# dimensions, symmetry and the weights count are checked by the loader.
PROBLEM_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ProblemFile",
    "type": "object",
    "required": ["matrices"],
    "properties": {
        "matrices": {"type": "array", "minItems": 1, "items": _MATRIX},
        "weights": {"type": "array", "minItems": 1, "items": {"type": "number", "exclusiveMinimum": 0}},
    },
}

ENVELOPE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ResultEnvelope",
    "type": "object",
    "required": ["command", "schema_version"],
    "oneOf": [{"required": ["result"]}, {"required": ["error"]}],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "result": {},
        "diagnostics": {"type": "object"},
        "error": {
            "type": "object",
            "required": ["code", "message"],
            "additionalProperties": False,
            "properties": {"code": {"type": "string"}, "message": {"type": "string"}},
        },
        "schema_version": {"const": SCHEMA_VERSION},
    },
    # error envelopes may name whatever the caller typed
    "if": {"required": ["result"]},
    "then": {"properties": {"command": {"enum": list(COMMANDS)}}},
}

_PROBLEM_VALIDATOR = Draft202012Validator(PROBLEM_SCHEMA)
_ENVELOPE_VALIDATOR = Draft202012Validator(ENVELOPE_SCHEMA)


def get_schema_definitions() -> dict[str, dict[str, Any]]:
    """
    Get all published schema documents

    Returns:
        Mapping of schema name to JSON schema document
    """
    return {"problem": PROBLEM_SCHEMA, "envelope": ENVELOPE_SCHEMA}


def _describe(error: ValidationError) -> str:
    return f"{error.json_path}: {error.message}"


def _check_finite(value: Any, path: str) -> list[str]:
    # JSON schema has no notion of NaN or infinity
    if isinstance(value, float):
        return [] if math.isfinite(value) else [f"{path}: value is not finite"]
    if isinstance(value, dict):
        return [p for k, v in value.items() for p in _check_finite(v, f"{path}.{k}")]
    if isinstance(value, list | tuple):
        return [p for i, v in enumerate(value) for p in _check_finite(v, f"{path}[{i}]")]
    return []


def validate_problem_document(document: Any) -> list[str]:
    """
    Check a decoded problem file against PROBLEM_SCHEMA

    Returns:
        List of problems found, each prefixed with its JSON path; empty when valid
    """
    errors = sorted(_PROBLEM_VALIDATOR.iter_errors(document), key=lambda e: e.json_path)
    return [_describe(e) for e in errors]


def validate_envelope(envelope: Any) -> list[str]:
    """
    Check an envelope against ENVELOPE_SCHEMA, then check that every float is finite

    Returns:
        List of problems found, each prefixed with its JSON path; empty when valid
    """
    errors = sorted(_ENVELOPE_VALIDATOR.iter_errors(envelope), key=lambda e: e.json_path)
    problems = [_describe(e) for e in errors]
    if isinstance(envelope, dict):
        problems.extend(_check_finite(envelope.get("result"), "$.result"))
        problems.extend(_check_finite(envelope.get("diagnostics"), "$.diagnostics"))
    return problems
