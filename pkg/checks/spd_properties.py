"""
Properties of the SPD primitives and the two-variable means
"""

import numpy as np

from bures_metric import fidelity
from spd_core import (
    SpectralDecomposition,
    arithmetic_mean,
    frobenius,
    geometric_mean,
    harmonic_mean,
    loewner_gap,
    polar_unitary,
    relative_error,
    sylvester_solve,
    weighted_geometric,
)

from .context import Outcome, PropertyContext

DISTINCT_TOL = 1e-6


def square_root_reconstructs(ctx: PropertyContext) -> Outcome:
    worst = 0.0
    for m in ctx.matrices:
        root = m.sqrt()
        worst = max(worst, relative_error(root @ root, m.entries), relative_error(root @ m.entries, m.entries @ root))
    return Outcome(worst <= ctx.settings.recon_tol, f"worst relative error {worst:.3e}")


def spectral_reconstruction(ctx: PropertyContext) -> Outcome:
    worst_recon = worst_ortho = 0.0
    for m in ctx.matrices:
        recon, ortho = SpectralDecomposition.of(m.entries).reconstruction_error(m.entries)
        worst_recon = max(worst_recon, recon)
        worst_ortho = max(worst_ortho, ortho)
    tol = ctx.settings.recon_tol
    return Outcome(
        worst_recon <= tol and worst_ortho <= tol, f"reconstruction {worst_recon:.3e}, orthogonality {worst_ortho:.3e}"
    )


def geometric_mean_riccati(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    g = geometric_mean(a, b)
    riccati = relative_error(g.entries @ a.inverse() @ g.entries, b.entries)
    symmetry = relative_error(geometric_mean(b, a).entries, g.entries)
    tol = ctx.settings.recon_tol
    return Outcome(riccati <= tol and symmetry <= tol, f"XA⁻¹X vs B {riccati:.3e}, A#B vs B#A {symmetry:.3e}")


def weighted_geometric_endpoints(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    start = relative_error(weighted_geometric(a, b, 0.0).entries, a.entries)
    end = relative_error(weighted_geometric(a, b, 1.0).entries, b.entries)
    tol = ctx.settings.recon_tol
    return Outcome(start <= tol and end <= tol, f"t=0 error {start:.3e}, t=1 error {end:.3e}")


def harmonic_geometric_arithmetic_chain(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    harmonic = harmonic_mean(a, b)
    geometric = geometric_mean(a, b)
    arithmetic = arithmetic_mean([a, b])
    slack = ctx.scaled_slack(a, b)
    lower = loewner_gap(harmonic, geometric)
    upper = loewner_gap(geometric, arithmetic)
    return Outcome(lower >= -slack and upper >= -slack, f"λmin(A#B − H) = {lower:.3e}, λmin((A+B)/2 − A#B) = {upper:.3e}")


def fidelity_below_mean_trace(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    fid = fidelity(a, b)
    bound = 0.5 * (a.trace + b.trace)
    gap = bound - fid
    if frobenius(a.entries - b.entries) > DISTINCT_TOL:
        return Outcome(gap > 0.0, f"(tr A + tr B)/2 − F = {gap!r} for distinct A, B")
    return Outcome(gap >= -ctx.settings.slack * max(1.0, bound), f"(tr A + tr B)/2 − F = {gap!r} for A ≈ B")


def polar_factor_orthogonal(ctx: PropertyContext) -> Outcome:
    a, b = ctx.pair()
    u = polar_unitary(a, b)
    defect = frobenius(u.T @ u - np.eye(ctx.dim))
    return Outcome(defect <= ctx.settings.recon_tol * np.sqrt(ctx.dim), f"‖UᵀU − I‖ = {defect:.3e}")


def sylvester_residual(ctx: PropertyContext) -> Outcome:
    a = ctx.matrices[0]
    y = ctx.random_symmetric()
    h = sylvester_solve(a, y).entries
    residual = relative_error(h @ a.entries + a.entries @ h, y)
    return Outcome(residual <= ctx.settings.recon_tol, f"‖HA + AH − Y‖/‖Y‖ = {residual:.3e}")


PROPERTIES = [
    ("square_root_reconstructs", square_root_reconstructs),
    ("spectral_reconstruction", spectral_reconstruction),
    ("geometric_mean_riccati", geometric_mean_riccati),
    ("weighted_geometric_endpoints", weighted_geometric_endpoints),
    ("harmonic_geometric_arithmetic_chain", harmonic_geometric_arithmetic_chain),
    ("fidelity_below_mean_trace", fidelity_below_mean_trace),
    ("polar_factor_orthogonal", polar_factor_orthogonal),
    ("sylvester_residual", sylvester_residual),
]
