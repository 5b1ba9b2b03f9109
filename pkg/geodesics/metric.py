"""
Riemannian inner product on the tangent space at an SPD point
"""

import numpy as np

from spd_core import as_spd, as_sym, require_same_dim, sylvester_solve


def riemannian_inner(a, y, z) -> float:
    """
    ⟨Y, Z⟩_A = Σ α_i ỹ_ji z̃_ji / (α_i + α_j)²

    with α the eigenvalues of A and ỹ, z̃ the tangent vectors in A's eigenbasis.
    """
    a = as_spd(a)
    y = as_sym(y)
    z = as_sym(z)
    require_same_dim(a, y, z)

    q = a.spectrum.eigenvectors
    alphas = a.spectrum.eigenvalues
    y_tilde = q.T @ y.entries @ q
    z_tilde = q.T @ z.entries @ q
    denominators = (alphas[:, None] + alphas[None, :]) ** 2
    # entry (j, i) carries the weight α_i
    return float(np.sum(alphas[None, :] * y_tilde * z_tilde / denominators))


def riemannian_inner_by_sylvester(a, y, z) -> float:
    """tr(KAH) with HA + AH = Y and KA + AK = Z"""
    a = as_spd(a)
    h = sylvester_solve(a, y).entries
    k = sylvester_solve(a, z).entries
    return float(np.trace(k @ a.entries @ h))
