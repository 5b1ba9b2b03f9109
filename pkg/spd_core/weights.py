"""
Normalized positive weight vectors
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ParamOutOfRange


@dataclass(frozen=True, eq=False)
class Weights:
    """Positive weights normalized to sum to one on construction"""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64).ravel()
        if values.size == 0:
            raise ParamOutOfRange("Weights must not be empty")
        if not np.all(np.isfinite(values)) or np.any(values <= 0):
            raise ParamOutOfRange(f"Weights must be finite and positive, got {values.tolist()}")
        values = values / values.sum()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def uniform(cls, m: int) -> "Weights":
        if m < 1:
            raise ParamOutOfRange(f"Need at least one weight, got m={m}")
        return cls(np.full(m, 1.0 / m))

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self):
        return iter(self.values.tolist())

    def is_uniform(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.values - 1.0 / len(self)) <= tol))

    def permuted(self, order: Sequence[int]) -> "Weights":
        return Weights(self.values[list(order)])


def as_weights(weights: "Weights | Sequence[float] | None", m: int) -> Weights:
    """Validate weights against an ensemble of size m; None means uniform"""
    if weights is None:
        return Weights.uniform(m)
    if not isinstance(weights, Weights):
        weights = Weights(np.asarray(weights, dtype=np.float64))
    if len(weights) != m:
        raise DimensionMismatch(f"Got {len(weights)} weights for {m} matrices")
    return weights
