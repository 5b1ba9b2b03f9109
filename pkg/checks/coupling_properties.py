"""
Properties of the optimal coupling and the Monte Carlo identities behind it
"""

import numpy as np

from bures_metric import bures_distance
from coupling import (
    build_coupling,
    mc_coupling_value,
    mc_covariance_check,
    mc_orbit_cost,
    mc_pair_cost,
    mc_pairwise_spread,
    min_pairwise_spread,
)
from spd_core import random_orthogonal, relative_error

from .context import Outcome, PropertyContext

DETERMINISM_SAMPLES = 4096
DETERMINISM_CHUNK = 1000


def coupling_identities(ctx: PropertyContext) -> Outcome:
    plan = ctx.plan
    tol = ctx.settings.recon_tol
    defect = plan.identity_defect()
    congruence = max(
        relative_error(r.entries @ plan.omega.entries @ r.entries, m.entries)
        for r, m in zip(plan.r_maps, plan.matrices, strict=True)
    )
    pushforward = max(plan.pair_pushforward_residuals(), default=0.0)
    return Outcome(
        defect <= tol * np.sqrt(ctx.dim) and congruence <= tol and pushforward <= tol,
        f"‖Σ w_j R_j − I‖ = {defect:.3e}, worst R_jΩR_j error {congruence:.3e}, worst pair pushforward {pushforward:.3e}",
    )


def mc_pair_cost_matches(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    s = ctx.settings
    estimate = mc_pair_cost(a, b, s.mc_samples, ctx.seed, s.chunk_size, s.workers)
    expected = bures_distance(a, b).squared
    return Outcome(
        estimate.within(expected, s.sigmas),
        f"estimate {estimate.mean!r} ± {estimate.std_error!r} vs d² = {expected!r}",
    )


def mc_coupling_value_matches(ctx: PropertyContext) -> Outcome:
    plan = ctx.plan
    s = ctx.settings
    estimate = mc_coupling_value(plan, samples=s.mc_samples, seed=ctx.seed, chunk_size=s.chunk_size, workers=s.workers)
    return Outcome(
        estimate.within(plan.optimal_value, s.sigmas),
        f"estimate {estimate.mean!r} ± {estimate.std_error!r} vs tr Ω = {plan.optimal_value!r}",
    )


def mc_covariance_matches(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    s = ctx.settings
    check = mc_covariance_check(a, b, s.mc_samples, ctx.seed, s.chunk_size, s.workers)
    return Outcome(check.passed(s.sigmas), f"largest entrywise z-score {check.max_z_score():.3f}")


def orbit_couplings_suboptimal(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    s = ctx.settings
    q = random_orthogonal(ctx.rng, ctx.dim)
    # E‖x − B^{1/2}QA^{-1/2}x‖² = tr A + tr B − 2 tr(B^{1/2} Q A^{1/2})
    exact = a.trace + b.trace - 2.0 * float(np.trace(b.sqrt() @ q @ a.sqrt()))
    optimal = bures_distance(a, b).squared
    estimate = mc_orbit_cost(a, b, q, s.mc_samples, ctx.seed, s.chunk_size, s.workers)
    return Outcome(
        exact >= optimal - ctx.settings.slack * max(1.0, optimal) and estimate.within(exact, s.sigmas),
        f"orbit cost {exact!r} (estimate {estimate.mean!r} ± {estimate.std_error!r}) vs d² = {optimal!r}",
    )


def pairwise_spread_matches(ctx: PropertyContext) -> Outcome:
    s = ctx.settings
    plan = build_coupling(ctx.matrices, None, ctx.barycenter_config(), s.recon_tol)
    expected = min_pairwise_spread(plan)
    estimate = mc_pairwise_spread(plan, s.mc_samples, ctx.seed, s.chunk_size, s.workers)
    return Outcome(
        estimate.within(expected, s.sigmas),
        f"estimate {estimate.mean!r} ± {estimate.std_error!r} vs m Σ tr A_j − m² tr Ω = {expected!r}",
    )


def mc_worker_independent(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    serial = mc_pair_cost(a, b, DETERMINISM_SAMPLES, ctx.seed, DETERMINISM_CHUNK, workers=1)
    pooled = mc_pair_cost(a, b, DETERMINISM_SAMPLES, ctx.seed, DETERMINISM_CHUNK, workers=4)
    return Outcome(
        serial.mean == pooled.mean and serial.std_error == pooled.std_error,
        f"1 worker {serial.mean!r}, 4 workers {pooled.mean!r}",
    )


PROPERTIES = [
    ("coupling_identities", coupling_identities),
    ("mc_pair_cost_matches", mc_pair_cost_matches),
    ("mc_coupling_value_matches", mc_coupling_value_matches),
    ("mc_covariance_matches", mc_covariance_matches),
    ("orbit_couplings_suboptimal", orbit_couplings_suboptimal),
    ("pairwise_spread_matches", pairwise_spread_matches),
    ("mc_worker_independent", mc_worker_independent),
]
