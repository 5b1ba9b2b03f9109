"""
Properties of the barycentre solver, the map K and the variance functional
"""

import math

import numpy as np

from barycentre import (
    barycenter,
    concavity_gap,
    eigenvalue_bounds_hold,
    map_H_j,
    map_K,
    restart_disagreement,
    trace_inequality_gap,
    two_point_barycenter,
    variance,
)
from bures_metric import bures_distance, hellinger
from geodesics import geodesic
from spd_core import (
    SpdMatrix,
    arithmetic_mean,
    frobenius,
    loewner_gap,
    power_mean_half,
    relative_error,
)

from .context import Outcome, PropertyContext

STATIONARITY_TOL = 1e-9
RESTART_TOL = 1e-9
RESTART_SOLVER_TOL = 1e-11
AGREEMENT_TOL = 1e-8
CONCAVITY_DISTINCT_TOL = 1e-3


def solver_converges(ctx: PropertyContext) -> Outcome:
    solution = ctx.solution
    return Outcome(
        solution.converged and solution.iterations <= ctx.settings.max_iter,
        f"{solution.iterations} iterations, residual {solution.residual:.3e}",
    )


def stationarity(ctx: PropertyContext) -> Outcome:
    defect = ctx.solution.stationarity_defect
    return Outcome(defect <= STATIONARITY_TOL * math.sqrt(ctx.dim), f"‖I − Σ w_j A_j # Ω⁻¹‖ = {defect:.3e}")


def trace_nondecreasing(ctx: PropertyContext) -> Outcome:
    traces = ctx.solution.trace_sequence
    return Outcome(ctx.solution.trace_monotone(), f"traces from {traces[0]!r} to {traces[-1]!r}")


def variance_nonincreasing(ctx: PropertyContext) -> Outcome:
    values = ctx.solution.variance_sequence
    return Outcome(ctx.solution.variance_monotone(), f"variance from {values[0]!r} to {values[-1]!r}")


def bounded_iterates(ctx: PropertyContext) -> Outcome:
    mean = arithmetic_mean(ctx.matrices, ctx.weights)
    iterates = ctx.solution.iterates[1:]
    if not iterates:
        return Outcome(True, "no iterates beyond the start")
    worst = min(loewner_gap(s, mean) for s in iterates)
    return Outcome(worst >= -ctx.scaled_slack(mean), f"smallest eigenvalue of Σ w_j A_j − S_n over n ≥ 1 is {worst:.3e}")


def below_arithmetic_mean(ctx: PropertyContext) -> Outcome:
    mean = arithmetic_mean(ctx.matrices, ctx.weights)
    gap = loewner_gap(ctx.solution.omega, mean)
    return Outcome(gap >= -ctx.scaled_slack(mean), f"λmin(Σ w_j A_j − Ω) = {gap:.3e}")


def eigenvalue_bounds(ctx: PropertyContext) -> Outcome:
    omega = ctx.solution.omega.spectrum.eigenvalues
    return Outcome(
        eigenvalue_bounds_hold(ctx.solution, ctx.matrices, ctx.settings.slack),
        f"spectrum of Ω in [{omega[-1]!r}, {omega[0]!r}]",
    )


def unique_from_restarts(ctx: PropertyContext) -> Outcome:
    initials = [arithmetic_mean(ctx.matrices, ctx.weights), ctx.random_spd()]
    cfg = ctx.barycenter_config(tol=min(ctx.settings.tol, RESTART_SOLVER_TOL))
    disagreement = restart_disagreement(ctx.matrices, ctx.weights, initials, cfg)
    return Outcome(disagreement <= RESTART_TOL, f"relative disagreement between restarts {disagreement:.3e}")


def variance_inequality(ctx: PropertyContext) -> Outcome:
    a = ctx.random_spd()
    k = map_K(a, ctx.matrices, ctx.weights, ctx.settings.recon_tol)
    before = variance(a, ctx.matrices, ctx.weights)
    after = variance(k, ctx.matrices, ctx.weights)
    step = bures_distance(a, k).squared
    margin = before - after - step
    return Outcome(margin >= -ctx.settings.slack * max(1.0, before), f"V(A) − V(K(A)) − d²(A,K(A)) = {margin:.3e}")


def map_K_forms_agree(ctx: PropertyContext) -> Outcome:
    a = ctx.random_spd()
    k = map_K(a, ctx.matrices, ctx.weights, ctx.settings.recon_tol)
    h = sum(w * map_H_j(a, m).entries for w, m in zip(ctx.weights.values, ctx.matrices, strict=True))
    mismatch = relative_error(h @ a.entries @ h, k.entries)
    return Outcome(mismatch <= ctx.settings.recon_tol, f"‖HAH − K(A)‖/‖K(A)‖ = {mismatch:.3e}")


def trace_inequality(ctx: PropertyContext) -> Outcome:
    general = trace_inequality_gap(ctx.random_spd(), ctx.matrices, ctx.weights)
    at_identity = trace_inequality_gap(np.eye(ctx.dim), ctx.matrices, ctx.weights)
    slack = ctx.settings.slack
    return Outcome(
        general >= -slack and at_identity >= -slack, f"gap at random A {general:.3e}, at A = I {at_identity:.3e}"
    )


def trace_root_concavity(ctx: PropertyContext) -> Outcome:
    x, y = ctx.pair()
    alpha = float(ctx.rng.uniform(0.05, 0.95))
    gap = concavity_gap(x, y, alpha)
    if frobenius(x.entries - y.entries) > CONCAVITY_DISTINCT_TOL:
        return Outcome(gap > 0.0, f"α={alpha:.3f}: concavity gap {gap:.3e} for distinct X, Y")
    return Outcome(gap >= -ctx.settings.slack, f"α={alpha:.3f}: concavity gap {gap:.3e} for X ≈ Y")


def permutation_invariance(ctx: PropertyContext) -> Outcome:
    order = ctx.rng.permutation(len(ctx.matrices))
    permuted = barycenter([ctx.matrices[i] for i in order], ctx.weights.permuted(order), ctx.barycenter_config())
    error = relative_error(permuted.omega.entries, ctx.solution.omega.entries)
    return Outcome(error <= AGREEMENT_TOL, f"order {order.tolist()}: relative difference {error:.3e}")


def two_point_on_geodesic(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    t = float(ctx.rng.uniform(0.05, 0.95))
    solved = two_point_barycenter(a, b, t, ctx.barycenter_config())
    closed = geodesic(a, b).evaluate(t)
    error = relative_error(solved.omega.entries, closed.entries)
    return Outcome(error <= AGREEMENT_TOL, f"t={t:.3f}: relative difference {error:.3e}")


def commuting_oracles(ctx: PropertyContext) -> Outcome:
    diagonals = [SpdMatrix(np.diag(m.spectrum.eigenvalues)) for m in ctx.matrices]
    omega = barycenter(diagonals, ctx.weights, ctx.barycenter_config()).omega
    power_mean = power_mean_half(diagonals, ctx.weights)
    error = relative_error(omega.entries, power_mean.entries)
    a, b = diagonals[0], diagonals[-1]
    d = bures_distance(a, b).d
    rho = hellinger(a, b)
    d_gap = abs(d - rho)
    return Outcome(
        error <= ctx.settings.recon_tol and d_gap <= 1e-12 * max(1.0, a.trace + b.trace),
        f"Ω vs Q½ relative difference {error:.3e}, |d − ρ| = {d_gap:.3e}",
    )


PROPERTIES = [
    ("solver_converges", solver_converges),
    ("stationarity", stationarity),
    ("trace_nondecreasing", trace_nondecreasing),
    ("variance_nonincreasing", variance_nonincreasing),
    ("bounded_iterates", bounded_iterates),
    ("below_arithmetic_mean", below_arithmetic_mean),
    ("eigenvalue_bounds", eigenvalue_bounds),
    ("unique_from_restarts", unique_from_restarts),
    ("variance_inequality", variance_inequality),
    ("map_K_forms_agree", map_K_forms_agree),
    ("trace_inequality", trace_inequality),
    ("trace_root_concavity", trace_root_concavity),
    ("permutation_invariance", permutation_invariance),
    ("two_point_on_geodesic", two_point_on_geodesic),
    ("commuting_oracles", commuting_oracles),
]
