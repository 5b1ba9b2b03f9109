"""
Properties of the Bures-Wasserstein distance and the comparison distances
"""

import math

import numpy as np

from bures_metric import affine_invariant_delta, bures_distance, fidelity, fidelity_variational_check, hellinger
from spd_core import SpdMatrix, frobenius, polar_unitary, random_orthogonal

from .context import Outcome, PropertyContext

SYMMETRY_TOL = 1e-10
ORBIT_TRIALS = 5
SEPARATION_TOL = 1e-6


def metric_axioms(ctx: PropertyContext) -> Outcome:
    a, b, c = ctx.pad(3)
    ab = bures_distance(a, b).d
    ba = bures_distance(b, a).d
    ac = bures_distance(a, c).d
    cb = bures_distance(c, b).d
    self_distance = bures_distance(a, a).d
    separates = ab > 0.0 or frobenius(a.entries - b.entries) <= SEPARATION_TOL
    symmetric = abs(ab - ba) <= SYMMETRY_TOL * max(1.0, ab)
    triangle = ab <= ac + cb + ctx.settings.slack
    return Outcome(
        symmetric and triangle and separates and self_distance <= 1e-12 and ab >= 0.0,
        f"d(A,B)={ab!r}, d(B,A)={ba!r}, d(A,C)+d(C,B)={ac + cb!r}, d(A,A)={self_distance!r}",
    )


def orbit_minimality(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    d = bures_distance(a, b).d
    a_half = a.sqrt()
    b_half = b.sqrt()
    smallest_excess = math.inf
    for _ in range(ORBIT_TRIALS):
        q = random_orthogonal(ctx.rng, ctx.dim)
        smallest_excess = min(smallest_excess, frobenius(a_half - b_half @ q) - d)
    attained = frobenius(a_half - b_half @ polar_unitary(a, b))
    attains = abs(attained - d) <= ctx.settings.slack * max(1.0, d)
    return Outcome(
        smallest_excess >= -ctx.settings.slack and attains,
        f"smallest excess over d {smallest_excess:.3e}, polar factor gives {attained!r} vs d={d!r}",
    )


def density_matrix_identity(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    rho = SpdMatrix(a.entries / a.trace)
    sigma = SpdMatrix(b.entries / b.trace)
    report = bures_distance(rho, sigma)
    gap = abs(0.5 * report.squared - (1.0 - report.fidelity))
    return Outcome(gap <= 1e-12, f"|½d² − (1 − F)| = {gap:.3e}")


def orthogonal_congruence_invariance(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    q = random_orthogonal(ctx.rng, ctx.dim)
    d = bures_distance(a, b).d
    rotated = bures_distance(SpdMatrix(q @ a.entries @ q.T), SpdMatrix(q @ b.entries @ q.T)).d
    gap = abs(rotated - d)
    return Outcome(gap <= SYMMETRY_TOL * max(1.0, d), f"|d(QAQᵀ,QBQᵀ) − d(A,B)| = {gap:.3e}")


def hellinger_dominates(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    rho = hellinger(a, b)
    d = bures_distance(a, b).d
    return Outcome(rho >= d - 1e-12 * max(1.0, d), f"ρ={rho!r}, d={d!r}")


def trace_bounds(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    d = bures_distance(a, b).d
    lower = abs(math.sqrt(a.trace) - math.sqrt(b.trace))
    upper = math.sqrt(a.trace) + math.sqrt(b.trace)
    slack = ctx.settings.slack * max(1.0, upper)
    return Outcome(lower - slack <= d <= upper + slack, f"{lower!r} ≤ d={d!r} ≤ {upper!r}")


def affine_invariant_symmetries(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    delta = affine_invariant_delta(a, b)
    swapped = affine_invariant_delta(b, a)
    x = ctx.rng.standard_normal((ctx.dim, ctx.dim)) + ctx.dim * np.eye(ctx.dim)
    congruent = affine_invariant_delta(SpdMatrix(x @ a.entries @ x.T), SpdMatrix(x @ b.entries @ x.T))
    inverted = affine_invariant_delta(SpdMatrix(a.inverse()), SpdMatrix(b.inverse()))
    scale = max(1.0, delta)
    passed = (
        abs(swapped - delta) <= SYMMETRY_TOL * scale
        and abs(congruent - delta) <= ctx.settings.slack * scale
        and abs(inverted - delta) <= ctx.settings.slack * scale
    )
    return Outcome(passed, f"δ={delta!r}, swapped {swapped!r}, congruent {congruent!r}, inverted {inverted!r}")


def fidelity_variational(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    probes = [ctx.random_spd() for _ in range(ctx.settings.probes)]
    report = fidelity_variational_check(a, b, probes, recon_tol=ctx.settings.recon_tol)
    if report.passed:
        return Outcome(True, f"all {len(report.clauses)} clauses pass, F={report.fidelity!r}")
    return Outcome(False, "; ".join(f"{c.name}: {c.detail}" for c in report.failures))


def fidelity_symmetric(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    gap = abs(fidelity(a, b) - fidelity(b, a))
    return Outcome(gap <= SYMMETRY_TOL, f"|F(A,B) − F(B,A)| = {gap:.3e}")


PROPERTIES = [
    ("metric_axioms", metric_axioms),
    ("orbit_minimality", orbit_minimality),
    ("density_matrix_identity", density_matrix_identity),
    ("orthogonal_congruence_invariance", orthogonal_congruence_invariance),
    ("hellinger_dominates", hellinger_dominates),
    ("trace_bounds", trace_bounds),
    ("affine_invariant_symmetries", affine_invariant_symmetries),
    ("fidelity_variational", fidelity_variational),
    ("fidelity_symmetric", fidelity_symmetric),
]
