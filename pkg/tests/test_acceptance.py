"""
End-to-end reproduction of the worked 2×2 example and the seeded property and
Monte Carlo identities at full sample counts (the latter marked slow)
"""

import io

import numpy as np
import pytest
from numpy.testing import assert_allclose

import app
from barycentre import BarycenterConfig, barycenter, power_mean_half, trace_inequality_gap
from bures_metric import bures_distance, fidelity_variational_check, hellinger
from checks import ERROR, FAIL, CheckSettings, PropertySuiteCoordinator
from coupling import build_coupling, mc_coupling_value, mc_covariance_check, mc_pair_cost
from geodesics import geodesic, monotonicity_gap, wasserstein_mean
from loaders import random_ensembles
from spd_core import (
    SpdMatrix,
    arithmetic_mean,
    geometric_mean,
    harmonic_mean,
    loewner_leq,
    random_psd,
    random_spd,
)

from .conftest import EXAMPLE_A, EXAMPLE_B, EXAMPLE_MEAN


def test_worked_example_mean(example_pair):
    assert_allclose(wasserstein_mean(*example_pair).entries, EXAMPLE_MEAN, rtol=0, atol=5e-4)


def test_worked_example_is_not_monotone(example_pair):
    assert monotonicity_gap(*example_pair) < 0


def test_commuting_oracles(rng):
    for _ in range(20):
        diagonals = [SpdMatrix(np.diag(rng.uniform(0.1, 10.0, size=4))) for _ in range(3)]
        weights = rng.uniform(0.5, 2.0, size=3)
        omega = barycenter(diagonals, weights).omega
        assert_allclose(omega.entries, power_mean_half(diagonals, weights).entries, rtol=1e-9, atol=1e-12)
        a, b = diagonals[:2]
        assert bures_distance(a, b).d == pytest.approx(hellinger(a, b), abs=1e-12)


def test_trace_inequality_at_identity(rng):
    for _ in range(50):
        dim = int(rng.integers(2, 7))
        matrices = [random_spd(rng, dim) for _ in range(int(rng.integers(2, 6)))]
        assert trace_inequality_gap(np.eye(dim), matrices) >= -1e-9


@pytest.mark.slow
def test_metric_axioms_on_psd_triples():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        dim = int(rng.integers(2, 9))
        a, b, c = (random_psd(rng, dim) for _ in range(3))
        ab = bures_distance(a, b).d
        assert ab == pytest.approx(bures_distance(b, a).d, abs=1e-10)
        assert ab <= bures_distance(a, c).d + bures_distance(c, b).d + 1e-9
        assert bures_distance(a, a).d <= 1e-12


@pytest.mark.slow
def test_variational_characterization_on_random_pairs():
    rng = np.random.default_rng(77)
    for _ in range(200):
        dim = int(rng.integers(2, 7))
        a, b = random_spd(rng, dim), random_spd(rng, dim)
        probes = [random_spd(rng, dim) for _ in range(100)]
        report = fidelity_variational_check(a, b, probes)
        assert report.passed, report.failures


@pytest.mark.slow
def test_property_suites_on_random_ensembles():
    settings = CheckSettings(mc_samples=20000, chunk_size=8192)
    entries, summary = PropertySuiteCoordinator(settings).run_all(random_ensembles(100, seed=0), seed=0)
    failures = [e for e in entries if e["status"] in (FAIL, ERROR)]
    assert failures == []
    assert summary["ensembles"] == 100


@pytest.mark.slow
def test_monte_carlo_identities_at_a_million_samples():
    a, b = SpdMatrix(np.array(EXAMPLE_A)), SpdMatrix(np.array(EXAMPLE_B))
    assert mc_pair_cost(a, b, samples=1_000_000, seed=0, workers=4).within(bures_distance(a, b).squared)

    rng = np.random.default_rng(5)
    plan = build_coupling([random_spd(rng, 3) for _ in range(4)])
    assert mc_coupling_value(plan, samples=1_000_000, seed=0, workers=4).within(plan.optimal_value)

    assert mc_covariance_check(a, b, samples=1_000_000, seed=0, workers=4).passed(sigmas=5.0)


@pytest.mark.slow
@pytest.mark.parametrize(
    "argv",
    [
        ["mc", "--samples", "100000", "--seed", "11"],
        ["mc", "--samples", "100000", "--seed", "11", "--coupling"],
        ["check", "--trials", "2", "--seed", "11"],
    ],
)
def test_seeded_commands_are_byte_identical(tmp_path, argv):
    path = tmp_path / "problem.json"
    path.write_text('{"matrices": [[[1, 1], [1, 2]], [[3, 1], [1, 2]]]}')
    if argv[0] == "mc":
        argv = [argv[0], str(path), *argv[1:]]

    outputs = []
    for _ in range(2):
        stdout = io.StringIO()
        app.run(argv, stdin=io.StringIO(""), stdout=stdout)
        outputs.append(stdout.getvalue())
    assert outputs[0] == outputs[1]


def _eigen_slack(*matrices: SpdMatrix) -> float:
    largest = max(float(m.spectrum.eigenvalues[0]) for m in matrices)
    return 1e-9 * max(1.0, largest)


@pytest.mark.slow
def test_loewner_inequalities_on_random_pairs_and_ensembles():
    rng = np.random.default_rng(6)
    for _ in range(500):
        dim = int(rng.integers(2, 7))
        a, b = random_spd(rng, dim), random_spd(rng, dim)
        chord_slack = _eigen_slack(a, b)
        path = geodesic(a, b)
        for t in np.linspace(0.1, 0.9, 9):
            assert loewner_leq(path.evaluate(t), (1 - t) * a.entries + t * b.entries, chord_slack)
        assert loewner_leq(path.cross_term, a.entries + b.entries, chord_slack)
        g = geometric_mean(a, b)
        assert loewner_leq(harmonic_mean(a, b), g, chord_slack)
        assert loewner_leq(g, arithmetic_mean([a, b]), chord_slack)

        m = int(rng.integers(2, 6))
        matrices = [random_spd(rng, dim) for _ in range(m)]
        weights = rng.uniform(0.5, 2.0, size=m)
        mean = arithmetic_mean(matrices, weights)
        solution = barycenter(matrices, weights, BarycenterConfig(keep_iterates=True))
        mean_slack = _eigen_slack(mean)
        assert loewner_leq(solution.omega, mean, mean_slack)
        for iterate in solution.iterates[1:]:
            assert loewner_leq(iterate, mean, mean_slack)


@pytest.mark.slow
def test_trace_inequality_on_random_ensembles():
    rng = np.random.default_rng(84)
    for _ in range(500):
        dim = int(rng.integers(2, 7))
        m = int(rng.integers(2, 6))
        matrices = [random_spd(rng, dim) for _ in range(m)]
        assert trace_inequality_gap(np.eye(dim), matrices, rng.uniform(0.5, 2.0, size=m)) >= -1e-9

    for _ in range(200):
        dim = int(rng.integers(2, 7))
        m = int(rng.integers(2, 6))
        matrices = [random_spd(rng, dim) for _ in range(m)]
        assert trace_inequality_gap(random_spd(rng, dim), matrices) >= -1e-9
