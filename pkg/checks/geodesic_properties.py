"""
Properties of transport maps, the geodesic and the Riemannian metric
"""

import numpy as np

from bures_metric import bures_distance
from geodesics import (
    curve_length,
    geodesic,
    harmonic_bound_search,
    monotonicity_gap,
    riemannian_inner,
    riemannian_inner_by_sylvester,
    transport_map,
)
from spd_core import loewner_gap, relative_error

from .context import Outcome, PropertyContext

INTERPOLATION_TOL = 1e-8
LENGTH_TOL = 1e-6
CHORD_TIMES = tuple(k / 10 for k in range(1, 10))
EXAMPLE_A = np.array([[1.0, 1.0], [1.0, 2.0]])
EXAMPLE_B = np.array([[3.0, 1.0], [1.0, 2.0]])


def transport_pushforward(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    plan = transport_map(a, b)
    residual = plan.pushforward_residual()
    return Outcome(residual <= ctx.settings.recon_tol, f"‖TAT − B‖/‖B‖ = {residual:.3e}")


def geodesic_endpoints(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    path = geodesic(a, b)
    start = relative_error(path.evaluate(0.0).entries, a.entries)
    end = relative_error(path.evaluate(1.0).entries, b.entries)
    tol = ctx.settings.recon_tol
    return Outcome(start <= tol and end <= tol, f"γ(0) error {start:.3e}, γ(1) error {end:.3e}")


def distance_interpolation(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    path = geodesic(a, b)
    d = bures_distance(a, b).d
    worst = 0.0
    for t in (0.25, 0.5, 0.75):
        worst = max(worst, abs(bures_distance(a, path.evaluate(t)).d - t * d) / max(d, 1e-300))
    return Outcome(worst <= INTERPOLATION_TOL, f"worst relative deviation from t·d {worst:.3e}")


def curve_length_matches_distance(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    length = curve_length(geodesic(a, b), ctx.settings.nodes)
    d = bures_distance(a, b).d
    error = abs(length - d) / max(d, 1e-300)
    return Outcome(error <= LENGTH_TOL, f"length {length!r} vs d {d!r} ({ctx.settings.nodes} nodes)")


def mean_below_chord(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    path = geodesic(a, b)
    slack = ctx.scaled_slack(a, b)
    worst = min(
        loewner_gap(path.evaluate(t), (1.0 - t) * a.entries + t * b.entries) for t in CHORD_TIMES
    )
    return Outcome(worst >= -slack, f"smallest eigenvalue of chord − γ(t) over t ∈ 0.1..0.9 is {worst:.3e}")


def cross_term_bound(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    path = geodesic(a, b)
    gap = loewner_gap(path.cross_term.entries, a.entries + b.entries)
    return Outcome(gap >= -ctx.scaled_slack(a, b), f"λmin(A + B − (AB)^½ − (BA)^½) = {gap:.3e}")


def reparametrization(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    path = geodesic(a, b)
    s, t, u = (float(x) for x in ctx.rng.uniform(0.05, 0.95, size=3))
    inner = geodesic(path.evaluate(s), path.evaluate(t)).evaluate(u)
    direct = path.evaluate((1.0 - u) * s + u * t)
    error = relative_error(inner.entries, direct.entries)
    return Outcome(error <= INTERPOLATION_TOL, f"s={s:.3f} t={t:.3f} u={u:.3f}: relative error {error:.3e}")


def riemannian_inner_forms(ctx: PropertyContext) -> Outcome:
    a = ctx.matrices[0]
    y = ctx.random_symmetric()
    z = ctx.random_symmetric()
    spectral = riemannian_inner(a, y, z)
    sylvester = riemannian_inner_by_sylvester(a, y, z)
    norm = riemannian_inner(a, y, y)
    gap = abs(spectral - sylvester) / max(1.0, abs(spectral))
    return Outcome(gap <= 1e-10 and norm > 0.0, f"eigenbasis {spectral!r}, Sylvester {sylvester!r}, ⟨Y,Y⟩ = {norm!r}")


def mean_not_monotone_example(ctx: PropertyContext) -> Outcome:
    gap = monotonicity_gap(EXAMPLE_A, EXAMPLE_B)
    return Outcome(gap < 0.0, f"λmin(A◇B − A) = {gap!r}")


def harmonic_lower_bound_search(ctx: PropertyContext) -> Outcome:
    witness = harmonic_bound_search(trials=1000, seed=ctx.seed)
    if witness is None:
        return Outcome(True, "no violation of the harmonic lower bound found in 1000 trials")
    return Outcome(True, f"violation found at trial {witness.trial}, gap {witness.gap!r}")


PROPERTIES = [
    ("transport_pushforward", transport_pushforward),
    ("geodesic_endpoints", geodesic_endpoints),
    ("distance_interpolation", distance_interpolation),
    ("curve_length_matches_distance", curve_length_matches_distance),
    ("mean_below_chord", mean_below_chord),
    ("cross_term_bound", cross_term_bound),
    ("reparametrization", reparametrization),
    ("riemannian_inner_forms", riemannian_inner_forms),
]

# independent of the ensemble; run once per suite
SUITE_PROPERTIES = [
    ("mean_not_monotone_example", mean_not_monotone_example),
    ("harmonic_lower_bound_search", harmonic_lower_bound_search),
]
