"""Pick matrix tests: algebraic oracles, witnesses, sampler determinism."""

import numpy as np
import pytest

from subbergman.cnp import (
    PickMatrix,
    build_pick,
    cnp_scan,
    psd_test,
    sample_points,
)
from subbergman.operators import jacobi_eigenvalues
from subbergman.scalars import as_weight
from subbergman.symbols import (
    BlaschkeSpec,
    MobiusSpec,
    PowerSeriesSymbol,
    normalize,
    to_series,
)

SHIFT = PowerSeriesSymbol(np.array([0.0, 1.0]))


# ---------------------------------------------------------------------------
# sampler


def test_sampler_is_deterministic():
    a = sample_points(25, np.random.default_rng([7, 0]))
    b = sample_points(25, np.random.default_rng([7, 0]))
    assert np.array_equal(a, b)
    c = sample_points(25, np.random.default_rng([7, 1]))
    assert not np.array_equal(a, c)


def test_sampler_respects_geometry():
    pts = sample_points(60, np.random.default_rng(5), alpha=1.0, r_max=0.95)
    assert len(pts) == 60
    assert np.max(np.abs(pts)) < 0.95
    diff = np.abs(pts[:, None] - pts[None, :])
    np.fill_diagonal(diff, np.inf)
    assert diff.min() >= 1e-3


def test_sampler_pushes_mass_outward_for_large_alpha():
    # the push exponent shrinks with alpha, enriching the boundary
    rng = np.random.default_rng(9)
    r_flat = np.abs(sample_points(400, np.random.default_rng(9), alpha=0.0))
    r_push = np.abs(sample_points(400, np.random.default_rng(9), alpha=4.0))
    assert np.median(r_push) > np.median(r_flat)


# ---------------------------------------------------------------------------
# Pick matrices and PSD verdicts


def test_shift_pick_matrix_is_rank_one():
    # K = 1/(1-z conj(w)) at alpha = 0, so M_ij = z_i conj(z_j)
    pts = sample_points(12, np.random.default_rng(1), r_max=0.9)
    pick = build_pick(SHIFT, 0.0, pts)
    expected = pts[:, None] * np.conj(pts)[None, :]
    np.testing.assert_allclose(pick.entries, expected, atol=1e-12)
    report = psd_test(pick, 1e-9)
    assert report.verdict == "psd_pass"
    assert report.min_eigenvalue >= -1e-12
    assert not report.certificate


def test_zero_row_at_base_point():
    pts = np.array([0.0, 0.3, -0.2 + 0.4j, 0.5j])
    pick = build_pick(to_series(BlaschkeSpec(zeros=(0.5, -0.5)), 200), 0.0, pts)
    assert np.max(np.abs(pick.entries[0, :])) < 1e-12
    assert np.max(np.abs(pick.entries[:, 0])) < 1e-12


def test_shift_alpha_one_closed_form():
    # K = (1-z conj(w))^-2, so M = 1 - (1-z conj(w))^2
    pts = sample_points(10, np.random.default_rng(2), alpha=1.0)
    pick = build_pick(SHIFT, 1.0, pts)
    x = pts[:, None] * np.conj(pts)[None, :]
    np.testing.assert_allclose(pick.entries, 1.0 - (1.0 - x) ** 2, atol=1e-12)


def test_psd_test_known_indefinite_matrix():
    m = PickMatrix(
        points=np.array([0.1, 0.2]),
        entries=np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
        alpha=as_weight(0.0),
        symbol_normalized=SHIFT,
    )
    report = psd_test(m, 1e-9)
    assert report.verdict == "fail"
    assert abs(report.min_eigenvalue + 1.0) < 1e-14
    assert report.certificate
    assert len(report.witness.points) == 2


def test_witness_is_minimal_and_reverifies():
    report = cnp_scan(
        to_series(BlaschkeSpec(zeros=(0.5, -0.5)), 200), 0.0, n_points=30, n_trials=5, seed=7
    )
    assert report.verdict == "fail"
    w = report.witness
    assert 2 <= len(w.points) <= 30
    # independent eigensolver on the exported witness matrix
    lam = jacobi_eigenvalues(w.matrix)
    assert lam[-1] < -1e-6
    # no single removal keeps the failure (minimality of the greedy prune)
    if len(w.points) > 2:
        for drop in range(len(w.points)):
            keep = [i for i in range(len(w.points)) if i != drop]
            sub = w.matrix[np.ix_(keep, keep)]
            trace = max(1.0, float(np.trace(sub).real))
            assert np.linalg.eigvalsh(sub)[0] >= -1e-9 * trace


def test_subset_monotonicity_of_passing_matrices():
    pts = sample_points(20, np.random.default_rng(3), alpha=-0.5)
    pick = build_pick(to_series(MobiusSpec(a=0.4), 200), -0.5, pts)
    assert psd_test(pick, 1e-9).verdict == "psd_pass"
    rng = np.random.default_rng(4)
    for _ in range(10):
        size = rng.integers(2, 15)
        idx = rng.choice(20, size=size, replace=False)
        sub = pick.entries[np.ix_(idx, idx)]
        trace = max(1.0, float(np.trace(sub).real))
        assert np.linalg.eigvalsh(sub)[0] >= -1e-9 * trace


def test_verdicts_invariant_under_normalization():
    # the Pick matrices of phi and its normalization are congruent, so
    # verdicts agree seed by seed
    phi = to_series(BlaschkeSpec(zeros=(0.5, -0.5)), 200)
    psi = normalize(phi).psi
    for seed in (7, 8, 9):
        rep_phi = cnp_scan(phi, 0.0, n_points=15, n_trials=1, seed=seed)
        rep_psi = cnp_scan(psi, 0.0, n_points=15, n_trials=1, seed=seed)
        assert rep_phi.verdict == rep_psi.verdict
        assert (rep_phi.min_eigenvalue < 0) == (rep_psi.min_eigenvalue < 0)


def test_scan_is_deterministic():
    phi = to_series(MobiusSpec(a=0.3j), 200)
    r1 = cnp_scan(phi, -0.5, n_points=12, n_trials=4, seed=11)
    r2 = cnp_scan(phi, -0.5, n_points=12, n_trials=4, seed=11)
    assert r1.verdict == r2.verdict
    assert r1.min_eigenvalue == r2.min_eigenvalue
    assert r1.failed_trials == r2.failed_trials


def test_scan_reports_trial_bookkeeping():
    rep = cnp_scan(SHIFT, 1.0, n_points=20, n_trials=8, seed=7)
    assert rep.verdict == "fail"
    assert rep.trials == 8
    assert rep.failed_trials >= 1
    assert rep.sampler_seed == 7
    assert rep.certificate
    assert rep.hazards == ()


# ---------------------------------------------------------------------------
# validation


def test_build_pick_rejects_bad_inputs():
    phi = to_series(MobiusSpec(a=0.4), 100)
    with pytest.raises(ValueError):
        build_pick(phi, 0.0, [])
    with pytest.raises(ValueError):
        build_pick(phi, 0.0, [0.5, 1.0])  # boundary point
    with pytest.raises(ValueError):
        build_pick(phi, 0.0, [0.5, 0.5])  # duplicates
    with pytest.raises(ValueError):
        build_pick(PowerSeriesSymbol(np.array([0.5])), 0.0, [0.1, 0.2])  # constant
    with pytest.raises(ValueError):
        build_pick(PowerSeriesSymbol(np.array([0.0, 1.4])), 0.0, [0.1, 0.2])  # inadmissible


def test_scan_propagates_structural_errors():
    with pytest.raises(ValueError):
        cnp_scan(PowerSeriesSymbol(np.array([0.5])), 0.0, n_points=5, n_trials=2, seed=1)
    with pytest.raises(ValueError):
        cnp_scan(SHIFT, 0.0, n_points=2, n_trials=2, seed=1)
    with pytest.raises(ValueError):
        cnp_scan(SHIFT, 0.0, n_points=5, n_trials=0, seed=1)


def test_psd_test_requires_positive_tolerance():
    pts = np.array([0.1, 0.2])
    pick = build_pick(SHIFT, 0.0, pts)
    with pytest.raises(ValueError):
        psd_test(pick, 0.0)
