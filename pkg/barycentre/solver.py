"""
Fixed-point solver for the Wasserstein barycentre

Iterates S_{n+1} = K(S_n) and records, per iterate, the trace, the variance
and the Bures step distance. The stopping rule needs a small relative step,
a small relative residual of Ω = Σ w_j (Ω^{1/2} A_j Ω^{1/2})^{1/2} and a small
gradient defect; the last scales with the condition number of Ω, so it can lag
the residual on badly conditioned inputs.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

import numpy as np

from bures_metric import bures_distance
from spd_core import (
    NotConverged,
    ParamOutOfRange,
    SpdMatrix,
    Weights,
    arithmetic_mean,
    as_spd,
    as_weights,
    frobenius,
    loewner_leq,
    relative_error,
    require_same_dim,
)

from .maps import FixedPointTerms, fixed_point_terms, gradient_defect

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 500
CONDITIONING_LIMIT = 1e12
MONOTONE_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class BarycenterConfig:
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    initial: SpdMatrix | None = None
    workers: int = 1
    keep_iterates: bool = False
    conditioning_limit: float = CONDITIONING_LIMIT

    def __post_init__(self):
        if not self.tol > 0:
            raise ParamOutOfRange(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ParamOutOfRange(f"max_iter must be >= 1, got {self.max_iter}")
        if self.workers < 1:
            raise ParamOutOfRange(f"workers must be >= 1, got {self.workers}")


@dataclass(eq=False)
class BarycenterSolution:
    """The fixed point Ω with per-iterate diagnostics"""

    omega: SpdMatrix
    iterations: int
    trace_sequence: list[float] = field(default_factory=list)
    variance_sequence: list[float] = field(default_factory=list)
    step_distances: list[float] = field(default_factory=list)
    residual: float = 0.0
    stationarity_defect: float = 0.0
    converged: bool = False
    ill_conditioned: bool = False
    iterates: list[SpdMatrix] = field(default_factory=list)

    def trace_monotone(self, slack: float = MONOTONE_SLACK) -> bool:
        """tr S_n ≤ tr S_{n+1} from n = 1 onward"""
        traces = self.trace_sequence
        return all(traces[n] <= traces[n + 1] + slack * max(1.0, abs(traces[n])) for n in range(1, len(traces) - 1))

    def variance_monotone(self, slack: float = MONOTONE_SLACK) -> bool:
        """V(S_{n+1}) ≤ V(S_n) for every n"""
        values = self.variance_sequence
        return all(values[n + 1] <= values[n] + slack * max(1.0, abs(values[n])) for n in range(len(values) - 1))


def _variance_from_terms(terms: FixedPointTerms, weights: Weights, traces: np.ndarray) -> float:
    # V(S) = tr S + Σ w_j tr A_j − 2 Σ w_j tr (S^{1/2} A_j S^{1/2})^{1/2}
    value = terms.point.trace + float(weights.values @ traces) - 2.0 * float(weights.values @ terms.trace_terms)
    return max(value, 0.0)


def barycenter(matrices: Sequence, weights=None, cfg: BarycenterConfig | None = None) -> BarycenterSolution:
    """
    Solve for the Wasserstein barycentre Ω(w; A_1, …, A_m)

    Args:
        matrices: PD matrices A_j of equal dimension
        weights: positive weights (normalized; uniform when None)
        cfg: tolerance, iteration cap and optional initial iterate

    Returns:
        BarycenterSolution

    Raises:
        NotConverged: after cfg.max_iter iterations, carrying the partial solution
    """
    cfg = cfg or BarycenterConfig()
    spds = [as_spd(m) for m in matrices]
    if not spds:
        raise ParamOutOfRange("Need at least one matrix")
    require_same_dim(*spds)
    w = as_weights(weights, len(spds))
    traces = np.array([m.trace for m in spds])

    ill_conditioned = any(m.condition_number > cfg.conditioning_limit for m in spds)
    if ill_conditioned:
        logger.warning(
            f"An input matrix has condition number above {cfg.conditioning_limit:.0e}; results may be inaccurate"
        )

    if len(spds) == 1:
        only = spds[0]
        return BarycenterSolution(
            omega=only,
            iterations=0,
            trace_sequence=[only.trace],
            variance_sequence=[0.0],
            converged=True,
            ill_conditioned=ill_conditioned,
        )

    current = as_spd(cfg.initial) if cfg.initial is not None else arithmetic_mean(spds, w)
    require_same_dim(current, spds[0])
    terms = fixed_point_terms(current, spds, w, workers=cfg.workers)

    solution = BarycenterSolution(
        omega=current,
        iterations=0,
        trace_sequence=[current.trace],
        variance_sequence=[_variance_from_terms(terms, w, traces)],
        residual=terms.residual(),
        ill_conditioned=ill_conditioned,
    )
    if cfg.keep_iterates:
        solution.iterates.append(current)
    logger.info(f"Barycentre solve: m={len(spds)}, dim={current.dim}, tol={cfg.tol:.1e}, max_iter={cfg.max_iter}")

    for n in range(1, cfg.max_iter + 1):
        following = terms.image()
        following_terms = fixed_point_terms(following, spds, w, workers=cfg.workers)

        step = frobenius(following.entries - current.entries) / frobenius(current.entries)
        solution.iterations = n
        solution.omega = following
        solution.residual = following_terms.residual()
        solution.trace_sequence.append(following.trace)
        solution.variance_sequence.append(_variance_from_terms(following_terms, w, traces))
        solution.step_distances.append(bures_distance(current, following).d)
        if cfg.keep_iterates:
            solution.iterates.append(following)
        logger.debug(f"iteration {n}: step={step:.3e} residual={solution.residual:.3e}")

        current, terms = following, following_terms
        if (
            step <= cfg.tol
            and solution.residual <= cfg.tol
            and following_terms.stationarity() <= cfg.tol * np.sqrt(following.dim)
        ):
            solution.converged = True
            break

    solution.stationarity_defect = frobenius(gradient_defect(solution.omega, spds, w))

    if not solution.converged:
        logger.warning(f"Barycentre did not converge in {cfg.max_iter} iterations (residual {solution.residual:.3e})")
        raise NotConverged(
            f"No convergence to tol={cfg.tol:.1e} within {cfg.max_iter} iterations; residual {solution.residual:.3e}",
            solution,
        )

    logger.info(f"Barycentre converged in {solution.iterations} iterations, residual {solution.residual:.3e}")
    return solution


def two_point_barycenter(a, b, t: float, cfg: BarycenterConfig | None = None) -> BarycenterSolution:
    """Barycentre of A, B with weights (1 − t, t); the point at t on the geodesic"""
    if not 0.0 <= t <= 1.0:
        raise ParamOutOfRange(f"t must lie in [0, 1], got {t}")
    if t in (0.0, 1.0):
        chosen = as_spd(a if t == 0.0 else b)
        return barycenter([chosen], None, cfg)
    return barycenter([a, b], [1.0 - t, t], cfg)


def eigenvalue_bounds_hold(solution: BarycenterSolution, matrices: Sequence, slack: float = 1e-9) -> bool:
    """If αI ≤ A_j ≤ βI for every j then αI ≤ Ω ≤ βI"""
    spds = [as_spd(m) for m in matrices]
    alpha = min(m.spectrum.eigenvalues[-1] for m in spds)
    beta = max(m.spectrum.eigenvalues[0] for m in spds)
    identity = np.eye(solution.omega.dim)
    omega = solution.omega.entries
    scale = max(1.0, beta)
    return loewner_leq(alpha * identity, omega, slack * scale) and loewner_leq(omega, beta * identity, slack * scale)


def restart_disagreement(matrices: Sequence, weights, initials: Sequence, cfg: BarycenterConfig | None = None) -> float:
    """
    Largest relative difference between solutions started from different initial iterates

    The barycentre is unique, so this should stay at the level of the tolerance.
    """
    cfg = cfg or BarycenterConfig()
    omegas = [barycenter(matrices, weights, replace(cfg, initial=as_spd(initial))).omega for initial in initials]
    if len(omegas) < 2:
        return 0.0
    reference = omegas[0].entries
    return max(relative_error(o.entries, reference) for o in omegas[1:])
