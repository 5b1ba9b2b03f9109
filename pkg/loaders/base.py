"""
Base loader with the common reading and JSON decoding steps
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, TextIO

from spd_core import InvalidProblem

logger = logging.getLogger(__name__)

STDIN_MARKERS = (None, "-")


class ProblemLoader:
    """Reads a JSON document from a file path or a stream"""

    def __init__(self, stream: TextIO | None = None):
        self.stream = stream if stream is not None else sys.stdin

    def _read_text(self, source: str | Path | None) -> tuple[str, str]:
        """Return (text, label) for a path, or for the stream when source is None or '-'"""
        if source in STDIN_MARKERS:
            logger.debug("Reading problem from standard input")
            return self.stream.read(), "<stdin>"

        path = Path(source)
        try:
            logger.debug(f"Reading problem from {path}")
            return path.read_text(encoding="utf-8"), str(path)
        except OSError as e:
            logger.error(f"Could not read {path}: {e}")
            raise InvalidProblem(f"Could not read {path}: {e.strerror or e}") from e

    def load_document(self, source: str | Path | None = None) -> dict[str, Any]:
        """Read and decode a JSON object"""
        text, label = self._read_text(source)
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidProblem(f"Invalid JSON in {label}: {e}") from e

        if not isinstance(document, dict):
            raise InvalidProblem(f"{label} must hold a JSON object, got {type(document).__name__}")
        return document
