"""
Loewner partial order tests
"""

import numpy as np
from scipy import linalg

from .errors import DimensionMismatch
from .matrices import as_array, symmetrize


def loewner_gap(a, b) -> float:
    """Smallest eigenvalue of B − A; nonnegative exactly when A ≤ B"""
    a = as_array(a)
    b = as_array(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"Cannot compare shapes {a.shape} and {b.shape}")
    return float(np.min(linalg.eigvalsh(symmetrize(b - a))))


def loewner_leq(a, b, slack: float = 0.0) -> bool:
    """A ≤ B up to an eigenvalue slack"""
    return loewner_gap(a, b) >= -slack
