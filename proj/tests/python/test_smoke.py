import numpy as np
import pytest

import dgsp


def test_cycle_metrics():
    r = dgsp.report(dgsp.directed_cycle(20), "cycle")
    assert r.graph_label == "cycle"
    assert abs(r.kappa - 1.0) <= 1e-9
    assert abs(r.alpha - 1.0) <= 1e-12
    assert abs(r.delta) <= 1e-12
    assert abs(r.henrici) <= 1e-9


def test_laplacian_rows_sum_to_zero():
    g = dgsp.perturbed_cycle(20, 0.2, 0.8, 7)
    lap = dgsp.laplacian(g)
    assert lap.shape == (20, 20)
    assert np.abs(lap.sum(axis=1)).max() <= 1e-12
    np.testing.assert_allclose(np.diag(lap), g.adjacency.sum(axis=1), rtol=1e-12)


def test_eigenvalues_match_numpy():
    g = dgsp.perturbed_cycle(15, 0.3, 0.8, 3)
    lap = dgsp.laplacian(g)
    es = dgsp.eig(lap)
    ours = np.sort_complex(es.values)
    ref = np.sort_complex(np.linalg.eigvals(lap))
    assert np.abs(ours - ref).max() <= 1e-9
    assert es.residual <= 1e-9


def test_transform_round_trip_and_energy():
    rng = np.random.default_rng(1)
    s = dgsp.Spectrum(dgsp.perturbed_cycle(20, 0.2, 0.8, 1))
    x = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    xh = s.forward(x)
    assert np.linalg.norm(s.inverse(xh) - x) <= 1e-9 * s.kappa * np.linalg.norm(x)
    assert abs(s.energy(xh) - np.linalg.norm(x) ** 2) <= 1e-9 * np.linalg.norm(x) ** 2
    lo, hi = s.parseval_bounds(xh)
    assert lo <= np.linalg.norm(x) ** 2 * (1 + 1e-9)
    assert np.linalg.norm(x) ** 2 <= hi * (1 + 1e-9)
    np.testing.assert_allclose(s.gram, s.vectors.conj().T @ s.vectors, atol=1e-12)


def test_filter_with_eigenvalues_applies_laplacian():
    rng = np.random.default_rng(2)
    g = dgsp.perturbed_cycle(20, 0.2, 0.8, 2)
    s = dgsp.Spectrum(g)
    x = rng.standard_normal(20) + 0j
    y = s.filter(s.values, x)
    assert np.linalg.norm(y - dgsp.laplacian(g) @ x) <= 1e-9 * s.kappa * np.linalg.norm(x) * 10
    assert abs(dgsp.directed_tv(g, x) - np.linalg.norm(dgsp.laplacian(g) @ x) ** 2) <= 1e-9 * dgsp.directed_tv(g, x)


def test_sampling_recovery():
    rng = np.random.default_rng(3)
    s = dgsp.Spectrum(dgsp.perturbed_cycle(20, 0.2, 0.8, 4))
    plan = dgsp.SamplingPlan(s, s.lowest_band(5), list(range(0, 20, 2)))
    assert plan.full_rank and plan.gamma > 0
    x = plan.basis @ (rng.standard_normal(5) + 1j * rng.standard_normal(5))
    r = plan.recover(plan.take_samples(x))
    assert np.linalg.norm(r["x_hat"] - x) <= 1e-8 * np.linalg.norm(x)
    assert plan.noise_bound(0.0) == 0.0


def test_errors_surface_as_python_exceptions():
    with pytest.raises(dgsp.Error):
        dgsp.from_edge_list(3, [(0, 1, 1.0), (0, 1, 2.0)])
    with pytest.raises(dgsp.ParseError):
        dgsp.parse_edge_list("0 1 1\n")
    s = dgsp.Spectrum(dgsp.directed_cycle(10))
    with pytest.raises(dgsp.UnrecoverableError):
        dgsp.SamplingPlan(s, [0, 1, 2], [0, 1]).recover(np.zeros(2, dtype=complex))
