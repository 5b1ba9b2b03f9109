"""
Seeded Monte Carlo checks of the Gaussian transport and coupling identities
"""

import logging
from dataclasses import dataclass

import numpy as np

from geodesics import transport_map
from spd_core import ParamOutOfRange, as_spd, require_same_dim

from .plan import CouplingPlan
from .streams import DEFAULT_CHUNK_SIZE, run_chunks

logger = logging.getLogger(__name__)

COUPLING_IDENTITY_TOL = 1e-9


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int

    def within(self, expected: float, sigmas: float = 3.0) -> bool:
        return abs(self.mean - expected) <= sigmas * self.std_error + 1e-12 * max(1.0, abs(expected))


@dataclass(frozen=True, eq=False)
class CovarianceCheck:
    """Empirical covariance of y = Tx against its target, entry by entry"""

    empirical: np.ndarray
    std_errors: np.ndarray
    target: np.ndarray
    samples: int
    seed: int

    def max_z_score(self) -> float:
        deviation = np.abs(self.empirical - self.target)
        with np.errstate(divide="ignore", invalid="ignore"):
            z = np.where(self.std_errors > 0, deviation / self.std_errors, np.where(deviation > 0, np.inf, 0.0))
        return float(np.max(z))

    def passed(self, sigmas: float = 5.0) -> bool:
        return self.max_z_score() <= sigmas


def _gaussian_rows(rng: np.random.Generator, n: int, root: np.ndarray) -> np.ndarray:
    # rows are x = A^{1/2} z; root is symmetric so z @ root gives the same rows
    return rng.standard_normal((n, root.shape[0])) @ root


def _estimate(stats, samples: int, seed: int) -> McEstimate:
    return McEstimate(mean=float(stats.mean), std_error=float(stats.std_error()), samples=samples, seed=seed)


def mc_map_cost(
    a,
    map_matrix: np.ndarray,
    samples: int,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    workers: int = 1,
) -> McEstimate:
    """E‖x − Mx‖² for x ~ N(0, A) and a fixed linear map M"""
    a = as_spd(a)
    root = a.sqrt()
    mapping = np.asarray(map_matrix, dtype=np.float64)

    def sampler(rng: np.random.Generator, n: int) -> np.ndarray:
        x = _gaussian_rows(rng, n, root)
        y = x @ mapping.T
        return np.sum((x - y) ** 2, axis=1)

    return _estimate(run_chunks(sampler, samples, seed, chunk_size, workers), samples, seed)


def mc_pair_cost(
    a, b, samples: int, seed: int = 0, chunk_size: int = DEFAULT_CHUNK_SIZE, workers: int = 1
) -> McEstimate:
    """
    Estimate E‖x − Tx‖² with T = A^{-1} # B; converges to d²(A,B)

    Args:
        a: source covariance (PD)
        b: target covariance (PD)
        samples: number of Gaussian draws
        seed: root seed of the substreams

    Returns:
        McEstimate of the transport cost
    """
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)
    t = transport_map(a, b).matrix.entries
    estimate = mc_map_cost(a, t, samples, seed, chunk_size, workers)
    logger.info(f"Pair cost estimate {estimate.mean!r} ± {estimate.std_error!r} from {samples} samples")
    return estimate


def mc_orbit_cost(
    a, b, rotation: np.ndarray, samples: int, seed: int = 0, chunk_size: int = DEFAULT_CHUNK_SIZE, workers: int = 1
) -> McEstimate:
    """
    Cost of the alternative coupling y = B^{1/2} Q A^{-1/2} x for an orthogonal Q

    Every such y has covariance B; none is cheaper than the optimal map.
    """
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)
    q = np.asarray(rotation, dtype=np.float64)
    if q.shape != (a.dim, a.dim):
        raise ParamOutOfRange(f"Rotation must be {a.dim}x{a.dim}, got {q.shape}")
    return mc_map_cost(a, b.sqrt() @ q @ a.inv_sqrt(), samples, seed, chunk_size, workers)


def mc_coupling_value(
    plan: CouplingPlan,
    weights=None,
    samples: int = 100000,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    workers: int = 1,
) -> McEstimate:
    """
    Estimate E‖Σ w_j x_j‖² for the coupled tuple x_j = R_j R_1^{-1} x_1; converges to tr Ω

    Each sample is also checked against Σ w_j x_j = R_1^{-1} x_1.
    """
    w = plan.weights if weights is None else weights
    w_values = np.asarray(getattr(w, "values", w), dtype=np.float64)
    if w_values.shape != (len(plan.matrices),):
        raise ParamOutOfRange(f"Expected {len(plan.matrices)} weights, got shape {w_values.shape}")

    root = plan.matrices[0].sqrt()
    r1_inv = plan.r_maps[0].inverse()
    combined = np.zeros_like(root)
    for weight, coupled in zip(w_values, plan.coupled_maps(), strict=True):
        combined = combined + weight * coupled
    violations = []

    def sampler(rng: np.random.Generator, n: int) -> np.ndarray:
        x1 = _gaussian_rows(rng, n, root)
        z = x1 @ combined.T
        expected = x1 @ r1_inv.T
        scale = np.maximum(1.0, np.linalg.norm(expected, axis=1))
        bad = int(np.sum(np.linalg.norm(z - expected, axis=1) > COUPLING_IDENTITY_TOL * scale))
        if bad:
            violations.append(bad)
        return np.sum(z * z, axis=1)

    estimate = _estimate(run_chunks(sampler, samples, seed, chunk_size, workers), samples, seed)
    if violations:
        logger.warning(f"{sum(violations)} samples broke Σ w_j x_j = R_1^{{-1}} x_1")
    logger.info(f"Coupling value estimate {estimate.mean!r} ± {estimate.std_error!r} (tr Ω = {plan.optimal_value!r})")
    return estimate


def mc_pairwise_spread(
    plan: CouplingPlan, samples: int, seed: int = 0, chunk_size: int = DEFAULT_CHUNK_SIZE, workers: int = 1
) -> McEstimate:
    """Estimate E Σ_{i<j} ‖x_i − x_j‖² under the optimal coupling"""
    root = plan.matrices[0].sqrt()
    maps = plan.coupled_maps()

    def sampler(rng: np.random.Generator, n: int) -> np.ndarray:
        x1 = _gaussian_rows(rng, n, root)
        xs = [x1 @ p.T for p in maps]
        total = np.zeros(n)
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                total += np.sum((xs[i] - xs[j]) ** 2, axis=1)
        return total

    return _estimate(run_chunks(sampler, samples, seed, chunk_size, workers), samples, seed)


def mc_covariance_check(
    a, b, samples: int, seed: int = 0, chunk_size: int = DEFAULT_CHUNK_SIZE, workers: int = 1
) -> CovarianceCheck:
    """Empirical covariance of y = Tx, x ~ N(0, A), against B = TAT"""
    a = as_spd(a)
    b = as_spd(b)
    require_same_dim(a, b)
    root = a.sqrt()
    t = transport_map(a, b).matrix.entries

    def sampler(rng: np.random.Generator, n: int) -> np.ndarray:
        y = _gaussian_rows(rng, n, root) @ t
        return np.einsum("ni,nj->nij", y, y)

    stats = run_chunks(sampler, samples, seed, chunk_size, workers)
    return CovarianceCheck(
        empirical=np.asarray(stats.mean),
        std_errors=np.asarray(stats.std_error()),
        target=b.entries,
        samples=samples,
        seed=seed,
    )
