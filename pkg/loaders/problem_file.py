"""
Problem files: an ensemble of matrices with optional weights
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TextIO

import numpy as np

from result_schema import PROBLEM_SCHEMA, validate_problem_document
from spd_core import InvalidProblem, SpdMatrix, Weights, as_spd, as_weights

from .base import ProblemLoader

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProblemFile:
    """
    Square real matrices of one dimension, plus optional positive weights

    The matrices are only checked structurally here; definiteness is checked by
    the command that uses them, since `dist` accepts PSD input and the rest need PD.
    """

    matrices: tuple[np.ndarray, ...]
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        if not self.matrices:
            raise InvalidProblem("Problem needs at least one matrix")
        dims = {m.shape for m in self.matrices}
        if len(dims) != 1:
            raise InvalidProblem(f"All matrices must share one dimension, got shapes {sorted(dims)}")
        if self.weights is not None:
            if len(self.weights) != len(self.matrices):
                raise InvalidProblem(f"Got {len(self.weights)} weights for {len(self.matrices)} matrices")
            if not all(np.isfinite(w) and w > 0 for w in self.weights):
                raise InvalidProblem(f"Weights must be finite and positive, got {list(self.weights)}")

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def __len__(self) -> int:
        return len(self.matrices)

    def spd(self, limit: int | None = None) -> list[SpdMatrix]:
        """The first `limit` matrices (all by default) as PD matrices (raises NotPd)"""
        return [as_spd(m) for m in self.matrices[:limit]]

    def psd(self, limit: int | None = None) -> list[SpdMatrix]:
        """The first `limit` matrices (all by default) as PSD matrices (raises NotPsd)"""
        return [SpdMatrix.psd(m) for m in self.matrices[:limit]]

    def resolved_weights(self) -> Weights:
        """Normalized weights; uniform 1/m when the file gives none"""
        return as_weights(self.weights, len(self.matrices))

    @classmethod
    def from_document(cls, document: dict[str, Any], label: str = "problem") -> "ProblemFile":
        problems = validate_problem_document(document)
        if problems:
            raise InvalidProblem(f"{label} does not match the problem schema: {problems[0]}")
        unknown = set(document) - set(PROBLEM_SCHEMA["properties"])
        if unknown:
            logger.warning(f"Ignoring unknown keys in {label}: {sorted(unknown)}")

        matrices = tuple(_parse_matrix(entry, index) for index, entry in enumerate(document["matrices"]))
        weights = document.get("weights")
        if weights is not None:
            weights = tuple(float(w) for w in weights)
        return cls(matrices=matrices, weights=weights)

    @classmethod
    def of(cls, matrices: Sequence, weights: Sequence[float] | None = None) -> "ProblemFile":
        """Build from in-memory matrices (used for random ensembles and tests)"""
        arrays = tuple(_readonly(np.asarray(getattr(m, "entries", m), dtype=np.float64)) for m in matrices)
        return cls(matrices=arrays, weights=None if weights is None else tuple(float(w) for w in weights))


def _readonly(array: np.ndarray) -> np.ndarray:
    array = array.copy()
    array.setflags(write=False)
    return array


def _parse_matrix(entry: list[list[float]], index: int) -> np.ndarray:
    n = len(entry)
    for row in entry:
        if len(row) != n:
            raise InvalidProblem(f"matrices[{index}] is not square: {n} rows but a row of length {len(row)}")

    matrix = np.array(entry, dtype=np.float64)
    if not np.all(np.isfinite(matrix)):
        raise InvalidProblem(f"matrices[{index}] has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(matrix))))
    if np.max(np.abs(matrix - matrix.T)) > SYMMETRY_TOL * scale:
        raise InvalidProblem(f"matrices[{index}] is not symmetric")
    return _readonly(matrix)


def load_problem(source: str | Path | None = None, stream: TextIO | None = None) -> ProblemFile:
    """
    Load a problem file

    Args:
        source: path to a JSON file; None or '-' reads the stream
        stream: stream to read when no path is given (standard input by default)

    Returns:
        ProblemFile

    Raises:
        InvalidProblem: on unreadable input, bad JSON or structural errors
    """
    loader = ProblemLoader(stream)
    document = loader.load_document(source)
    problem = ProblemFile.from_document(document, label=str(source or "<stdin>"))
    logger.info(f"Loaded {len(problem)} matrices of dimension {problem.dim}")
    return problem


def load_initial(source: str, problem: ProblemFile) -> SpdMatrix:
    """
    Resolve a barycentre starting point given as a matrix index or a problem-file path

    A path must hold a problem file whose first matrix is used.
    """
    if source.isdigit():
        index = int(source)
        if index >= len(problem):
            raise InvalidProblem(f"Initial index {index} is out of range for {len(problem)} matrices")
        return as_spd(problem.matrices[index])

    initial = load_problem(source)
    if initial.dim != problem.dim:
        raise InvalidProblem(f"Initial matrix has dimension {initial.dim}, the problem has {problem.dim}")
    return as_spd(initial.matrices[0])
