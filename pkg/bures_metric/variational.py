"""
Diagnostic check of the variational characterizations of fidelity

The minimizer of ½ tr(AX + BX^{-1}) over PD X is X₀ = A^{-1} # B and the
minimum value is F(A,B). This module does not optimize; it evaluates the
closed-form stationary point and checks that random probes never beat it.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from spd_core import RECON_TOL, SpdMatrix, as_spd, geometric_mean, relative_error, require_same_dim

from .distance import fidelity

logger = logging.getLogger(__name__)

VARIATIONAL_TOL = 1e-9


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str


@dataclass
class CheckReport:
    """Outcome of every clause; a failed clause names what was violated"""

    fidelity: float
    minimizer: np.ndarray
    clauses: list[ClauseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(clause.passed for clause in self.clauses)

    @property
    def failures(self) -> list[ClauseResult]:
        return [clause for clause in self.clauses if not clause.passed]

    def record(self, name: str, passed: bool, detail: str) -> None:
        if not passed:
            logger.warning(f"Variational clause '{name}' failed: {detail}")
        self.clauses.append(ClauseResult(name=name, passed=bool(passed), detail=detail))


def _close(actual: float, expected: float, tol: float) -> bool:
    return abs(actual - expected) <= tol * max(1.0, abs(expected))


def fidelity_variational_check(
    a,
    b,
    probes: Sequence = (),
    tol: float = VARIATIONAL_TOL,
    recon_tol: float = RECON_TOL,
) -> CheckReport:
    """
    Check the three variational characterizations of F(A,B) at their closed-form optimizers

    Args:
        a: PD matrix
        b: PD matrix
        probes: PD matrices X that must not beat the minimizer
        tol: relative tolerance for the value identities
        recon_tol: relative Frobenius tolerance for the matrix identity

    Returns:
        CheckReport with one entry per clause
    """
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)

    fid = fidelity(a, b)
    x0 = geometric_mean(SpdMatrix(a.inverse()), b)
    x0_inv = x0.inverse()
    report = CheckReport(fidelity=fid, minimizer=x0.entries)

    tr_ax = float(np.trace(a.entries @ x0.entries))
    tr_bx = float(np.trace(b.entries @ x0_inv))

    half_sum = 0.5 * (tr_ax + tr_bx)
    report.record("min_half_trace_sum", _close(half_sum, fid, tol), f"½tr(AX₀+BX₀⁻¹)={half_sum!r}, F={fid!r}")

    geo = math.sqrt(max(tr_ax * tr_bx, 0.0))
    report.record("min_trace_product", _close(geo, fid, tol), f"√(tr AX₀ · tr BX₀⁻¹)={geo!r}, F={fid!r}")

    report.record(
        "balanced_traces",
        _close(tr_ax, fid, tol) and _close(tr_bx, fid, tol),
        f"tr AX₀={tr_ax!r}, tr BX₀⁻¹={tr_bx!r}, F={fid!r}",
    )

    worst_margin = math.inf
    beaten_by = None
    for index, probe in enumerate(probes):
        x = as_spd(probe)
        value = 0.5 * float(np.trace(a.entries @ x.entries) + np.trace(b.entries @ x.inverse()))
        margin = value - fid
        if margin < worst_margin:
            worst_margin = margin
        if margin < -tol * max(1.0, fid) and beaten_by is None:
            beaten_by = index
    report.record(
        "probe_dominance",
        beaten_by is None,
        f"{len(probes)} probes, smallest excess {worst_margin!r}"
        + ("" if beaten_by is None else f", probe {beaten_by} beat the minimizer"),
    )

    # M = A(A^{-1} # B) is the square root of AB attaining max tr M
    m = a.entries @ x0.entries
    recovered = m @ b.inverse() @ m.T
    recon = relative_error(recovered, a.entries)
    tr_m = float(np.trace(m))
    report.record(
        "product_root_attains",
        recon <= recon_tol and _close(tr_m, fid, tol),
        f"‖MB⁻¹Mᵀ−A‖/‖A‖={recon:.3e}, tr M={tr_m!r}, F={fid!r}",
    )

    logger.debug(f"Variational check: {len(report.clauses) - len(report.failures)}/{len(report.clauses)} clauses pass")
    return report
