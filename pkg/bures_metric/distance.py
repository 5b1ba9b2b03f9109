"""
Bures-Wasserstein distance, fidelity and the comparison distances
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from spd_core import (
    NegativeDiscriminant,
    SpdMatrix,
    as_psd,
    as_spd,
    frobenius,
    require_same_dim,
)

logger = logging.getLogger(__name__)

DISCRIMINANT_SLACK = 1e-12


@dataclass(frozen=True)
class DistanceReport:
    """d(A,B) together with the trace terms it was assembled from"""

    d: float
    fidelity: float
    trace_a: float
    trace_b: float

    @property
    def squared(self) -> float:
        return self.d * self.d


def fidelity(a, b) -> float:
    """F(A,B) = tr (A^{1/2} B A^{1/2})^{1/2}"""
    a = as_psd(a)
    b = as_psd(b)
    require_same_dim(a, b)

    a_half = a.sqrt()
    inner = SpdMatrix.psd(a_half @ b.entries @ a_half)
    return float(np.sum(np.sqrt(inner.spectrum.eigenvalues)))


def bures_distance(a, b, slack: float = DISCRIMINANT_SLACK) -> DistanceReport:
    """
    d(A,B) = [tr A + tr B − 2 tr (A^{1/2} B A^{1/2})^{1/2}]^{1/2}

    Args:
        a: PSD matrix
        b: PSD matrix of the same dimension
        slack: how far below zero the bracket may fall, relative to max(1, tr A + tr B), before it is treated as corruption

    Returns:
        DistanceReport with d, the fidelity and both traces

    Raises:
        NegativeDiscriminant: if the bracket is below that margin
    """
    a = as_psd(a)
    b = as_psd(b)
    require_same_dim(a, b)

    if np.array_equal(a.entries, b.entries):
        return DistanceReport(d=0.0, fidelity=a.trace, trace_a=a.trace, trace_b=a.trace)

    fid = fidelity(a, b)
    bracket = a.trace + b.trace - 2.0 * fid
    if bracket < -slack * max(1.0, a.trace + b.trace):
        raise NegativeDiscriminant(f"Squared distance came out as {bracket:.3e}")
    bracket = max(bracket, 0.0)

    return DistanceReport(d=math.sqrt(bracket), fidelity=fid, trace_a=a.trace, trace_b=b.trace)


def hellinger(a, b) -> float:
    """ρ(A,B) = ‖A^{1/2} − B^{1/2}‖_F"""
    a = as_psd(a)
    b = as_psd(b)
    require_same_dim(a, b)
    return frobenius(a.sqrt() - b.sqrt())


def affine_invariant_delta(a, b) -> float:
    """δ(A,B) = ‖log A^{-1/2} B A^{-1/2}‖_F"""
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)

    a_inv_half = a.inv_sqrt()
    conjugated = SpdMatrix.psd(a_inv_half @ b.entries @ a_inv_half)
    return frobenius(conjugated.log())
