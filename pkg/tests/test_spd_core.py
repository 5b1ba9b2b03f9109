import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from numpy.testing import assert_allclose

from spd_core import (
    DimensionMismatch,
    NotPd,
    NotPsd,
    ParamOutOfRange,
    SpdMatrix,
    SpectralDecomposition,
    SymMatrix,
    Weights,
    arithmetic_mean,
    as_spd,
    as_weights,
    geometric_mean,
    harmonic_mean,
    loewner_gap,
    loewner_leq,
    polar_unitary,
    power_mean_half,
    random_orthogonal,
    random_psd,
    sqrt_psd,
    sylvester_solve,
    weighted_geometric,
)

from .conftest import dims, seeds, spd_pair

TOL = 1e-9


@settings(deadline=None, derandomize=True, max_examples=50)
@given(
    factor=arrays(
        np.float64,
        (4, 4),
        elements=st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False),
    )
)
def test_square_root_squares_back(factor):
    a = SpdMatrix(factor @ factor.T + np.eye(4))
    root = sqrt_psd(a)
    assert_allclose(root.entries @ root.entries, a.entries, rtol=0, atol=TOL * np.linalg.norm(a.entries))
    assert root.spectrum.eigenvalues[-1] > 0


def test_spectral_decomposition_is_ordered_and_orthonormal(rng):
    matrix = random_psd(rng, 5).entries
    spectrum = SpectralDecomposition.of(matrix)
    assert np.all(np.diff(spectrum.eigenvalues) <= 0)
    recon, ortho = spectrum.reconstruction_error(matrix)
    assert recon <= TOL
    assert ortho <= TOL


def test_rejects_indefinite_matrix():
    with pytest.raises(NotPd):
        SpdMatrix(np.diag([1.0, -1.0]))
    with pytest.raises(NotPsd):
        SpdMatrix.psd(np.diag([1.0, -1.0]))


def test_psd_accepts_singular_and_clamps_rounding_noise():
    m = SpdMatrix.psd(np.diag([1.0, -1e-14]))
    assert m.spectrum.eigenvalues[-1] == 0.0
    assert not m.is_pd
    with pytest.raises(NotPd):
        m.inverse()


def test_pd_threshold_is_relative_to_largest_eigenvalue():
    with pytest.raises(NotPd):
        SpdMatrix(np.diag([1e6, 1e-7]))
    assert SpdMatrix(np.diag([1.0, 1e-11])).is_pd


def test_entries_are_read_only():
    m = SpdMatrix(np.eye(2))
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5.0


def test_shape_and_finiteness_checks():
    with pytest.raises(DimensionMismatch):
        SpdMatrix(np.ones((2, 3)))
    with pytest.raises(NotPsd):
        SpdMatrix(np.array([[np.nan, 0.0], [0.0, 1.0]]))
    assert SpdMatrix(4.0).dim == 1


def test_symmetrizes_input():
    m = SymMatrix(np.array([[1.0, 2.0], [0.0, 1.0]]))
    assert_allclose(m.entries, [[1.0, 1.0], [1.0, 1.0]])


@settings(deadline=None, derandomize=True, max_examples=40)
@given(seed=seeds, dim=dims)
def test_sylvester_solution_satisfies_equation(seed, dim):
    rng = np.random.default_rng(seed)
    a, _ = spd_pair(seed, dim)
    y = rng.standard_normal((dim, dim))
    y = y + y.T
    h = sylvester_solve(a, y).entries
    assert_allclose(h @ a.entries + a.entries @ h, y, rtol=0, atol=TOL * max(1.0, np.linalg.norm(y)))
    assert_allclose(h, h.T)


def test_sylvester_at_identity_halves():
    y = np.array([[2.0, 4.0], [4.0, -6.0]])
    assert_allclose(sylvester_solve(np.eye(2), y).entries, y / 2)


def test_sylvester_diagonal_example():
    h = sylvester_solve(np.diag([1.0, 3.0]), [[2.0, 4.0], [4.0, 6.0]])
    assert_allclose(h.entries, np.ones((2, 2)), atol=1e-12)


@settings(deadline=None, derandomize=True, max_examples=40)
@given(seed=seeds, dim=dims)
def test_geometric_mean_solves_riccati_and_is_symmetric(seed, dim):
    a, b = spd_pair(seed, dim)
    g = geometric_mean(a, b)
    scale = np.linalg.norm(b.entries)
    assert_allclose(g.entries @ a.inverse() @ g.entries, b.entries, rtol=0, atol=TOL * scale)
    assert_allclose(geometric_mean(b, a).entries, g.entries, rtol=0, atol=TOL * np.linalg.norm(g.entries))


def test_geometric_mean_of_commuting_matrices(commuting_pair):
    a, b = commuting_pair
    assert_allclose(geometric_mean(a, b).entries, np.diag([3.0, 8.0]), atol=1e-12)


def test_weighted_geometric_endpoints_and_range(example_pair):
    a, b = example_pair
    assert_allclose(weighted_geometric(a, b, 0.0).entries, a.entries, atol=1e-12)
    assert_allclose(weighted_geometric(a, b, 1.0).entries, b.entries, atol=1e-12)
    with pytest.raises(ParamOutOfRange):
        weighted_geometric(a, b, 1.5)


def test_weighted_geometric_of_commuting_matrices():
    a = np.diag([1.0, 16.0])
    b = np.diag([16.0, 1.0])
    assert_allclose(weighted_geometric(a, b, 0.25).entries, np.diag([2.0, 8.0]), rtol=1e-12)
    assert_allclose(weighted_geometric(a, b, 0.5).entries, np.diag([4.0, 4.0]), rtol=1e-12)


def test_means_of_widely_spread_inputs():
    # each input has condition number 1e8; the conjugated product has 1e16
    a = SpdMatrix(np.diag([1e4, 1e-4]))
    b = SpdMatrix(np.diag([1e-4, 1e4]))
    assert_allclose(geometric_mean(a, b).entries, np.eye(2), rtol=0, atol=1e-10)
    assert_allclose(weighted_geometric(a, b, 0.25).entries, np.diag([100.0, 0.01]), rtol=1e-10)
    assert_allclose(polar_unitary(a, b), np.eye(2), atol=1e-10)


@settings(deadline=None, derandomize=True, max_examples=40)
@given(seed=seeds, dim=dims)
def test_harmonic_geometric_arithmetic_chain(seed, dim):
    a, b = spd_pair(seed, dim)
    geometric = geometric_mean(a, b)
    assert loewner_leq(harmonic_mean(a, b), geometric, 1e-9 * 10)
    assert loewner_leq(geometric, arithmetic_mean([a, b]), 1e-9 * 10)


@settings(deadline=None, derandomize=True, max_examples=40)
@given(seed=seeds, dim=st.integers(min_value=2, max_value=6))
def test_polar_unitary_is_orthogonal_and_optimal(seed, dim):
    a, b = spd_pair(seed, dim)
    u = polar_unitary(a, b)
    assert_allclose(u.T @ u, np.eye(dim), atol=TOL)
    best = np.linalg.norm(a.sqrt() - b.sqrt() @ u)
    q = random_orthogonal(np.random.default_rng(seed + 1), dim)
    assert np.linalg.norm(a.sqrt() - b.sqrt() @ q) >= best - TOL


def test_loewner_gap_sign():
    assert loewner_gap(np.eye(2), 2 * np.eye(2)) == pytest.approx(1.0)
    assert not loewner_leq(np.diag([1.0, 3.0]), np.diag([2.0, 2.0]))
    with pytest.raises(DimensionMismatch):
        loewner_gap(np.eye(2), np.eye(3))


def test_weights_normalize_and_validate():
    assert_allclose(Weights(np.array([1.0, 3.0])).values, [0.25, 0.75])
    assert Weights.uniform(4).is_uniform()
    with pytest.raises(ParamOutOfRange):
        Weights(np.array([1.0, 0.0]))
    with pytest.raises(DimensionMismatch):
        as_weights([1.0, 2.0], 3)
    assert_allclose(Weights(np.array([1.0, 2.0, 5.0])).permuted([2, 0, 1]).values, [5 / 8, 1 / 8, 2 / 8])


def test_power_mean_half_of_commuting_matrices(commuting_pair):
    a, b = commuting_pair
    assert_allclose(power_mean_half([a, b]).entries, np.diag([4.0, 9.0]), atol=1e-12)


def test_as_spd_passes_existing_matrices_through():
    m = SpdMatrix(np.eye(3))
    assert as_spd(m) is m
    with pytest.raises(NotPd):
        as_spd(SpdMatrix.psd(np.diag([1.0, 0.0])))


def test_random_orthogonal_in_dimension_one(rng):
    q = random_orthogonal(rng, 1)
    assert q.shape == (1, 1)
    assert abs(q[0, 0]) == 1.0
