"""
Published JSON schema (v1) for problem files and result envelopes
"""

from .definitions import (
    COMMANDS,
    ENVELOPE_SCHEMA,
    PROBLEM_SCHEMA,
    SCHEMA_VERSION,
    get_schema_definitions,
    validate_envelope,
    validate_problem_document,
)

__all__ = [
    "COMMANDS",
    "ENVELOPE_SCHEMA",
    "PROBLEM_SCHEMA",
    "SCHEMA_VERSION",
    "get_schema_definitions",
    "validate_envelope",
    "validate_problem_document",
]
