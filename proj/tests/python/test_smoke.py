"""Smoke tests for the Python module: the main operations run end to end and
reproduce a few frozen values."""

import math

import numpy as np
import pytest

import nhqw

PI = math.pi
GAMMA = 0.2746


def test_version():
    assert nhqw.__version__


def test_loss_fraction_round_trip():
    p = nhqw.loss_fraction(GAMMA)
    assert p == pytest.approx(0.6665958962656855, abs=1e-12)
    assert -0.25 * math.log1p(-p) == pytest.approx(GAMMA, abs=1e-12)
    with pytest.raises(ValueError):
        nhqw.loss_fraction(-0.1)


def test_gbz_radius_and_ep_law():
    assert nhqw.gbz_radius(-0.44 * PI, GAMMA) == pytest.approx(
        0.4205409284117318, abs=1e-12)
    assert nhqw.gbz_radius(0.3, 0.0) == pytest.approx(1.0, abs=1e-14)
    assert nhqw.exceptional_theta2(GAMMA) / PI == pytest.approx(
        0.41367034119679924, abs=1e-12)
    assert nhqw.exceptional_theta2(0.1373) / PI == pytest.approx(
        0.45643272165057397, abs=1e-12)


def test_pt_classification():
    exact = nhqw.CoinParams.from_pi_units(0.5625, 0.75)
    broken = nhqw.CoinParams.from_pi_units(0.5625, 0.45)
    assert nhqw.pt_classify(exact, GAMMA).phase == nhqw.PtClassification.Phase.Exact
    assert nhqw.pt_classify(broken, GAMMA).phase == nhqw.PtClassification.Phase.Broken


def test_spectra_shapes_and_reality():
    exact = nhqw.CoinParams.from_pi_units(0.5625, 0.75)
    spec = nhqw.nonbloch_spectrum(exact, GAMMA, 128)
    assert spec.shape == (256,)
    assert np.max(np.abs(spec.imag)) < 1e-8

    broken = nhqw.CoinParams.from_pi_units(0.5625, 0.45)
    assert np.max(nhqw.nonbloch_spectrum(broken, GAMMA, 128).imag) > 1e-3
    # With skin effect, the Bloch spectrum is complex even when the GBZ one
    # is real.
    assert np.max(np.abs(nhqw.bloch_spectrum(exact, GAMMA, 128).imag)) > 1e-6


def test_step_operator_unitary_limit():
    coin = nhqw.CoinParams.from_pi_units(0.5625, -0.44)
    config = nhqw.WalkConfig(coin, coin, 0.0, 0, 12, nhqw.Boundary.Periodic)
    u = nhqw.build_step_operator(config, nhqw.StepVariant.Balanced).matrix
    assert np.max(np.abs(u.conj().T @ u - np.eye(24))) < 1e-12


def test_evolve_ledger_and_corrected_series():
    left = nhqw.CoinParams.from_pi_units(-0.0625, 0.75)
    right = nhqw.CoinParams.from_pi_units(0.5625, 0.45)
    spec = nhqw.SchemeSpec(scheme=nhqw.SchemeSpec.Scheme.Bulk, x0=6, steps=7)
    config = nhqw.sized_for(left, right, GAMMA, spec)
    traj = nhqw.evolve(config, spec)

    survival = np.asarray(traj.survival)
    cum_loss = np.asarray(traj.cum_loss)
    assert np.max(np.abs(survival + cum_loss - 1.0)) < 1e-10

    p_total = np.asarray(nhqw.corrected_total(traj, GAMMA))
    p_site = np.asarray(nhqw.corrected_site(traj, GAMMA, 6))
    assert p_total[0] == 1.0
    assert p_site[0] == 1.0
    assert p_site[7] > p_site[1]  # broken phase grows


def test_fit_and_locate_ep():
    series = [math.exp(0.2 * t) for t in range(21)]
    fit = nhqw.fit_exponential(series, 1, 20)
    assert fit.param == pytest.approx(0.2, abs=1e-10)

    search = nhqw.EpSearch(
        left=nhqw.CoinParams.from_pi_units(-0.0625, 0.75),
        theta1_right=0.5625 * PI,
        gamma=GAMMA,
    )
    ep = nhqw.locate_ep(search, nhqw.EpEstimate.Criterion.ProbabilityUnity,
                        0.38, 0.45)
    assert 0.411 < ep.theta2_star_pi < 0.415


def test_config_json_round_trip():
    config = nhqw.preset_config("fig2e")
    text = nhqw.walk_config_to_json(config)
    back = nhqw.walk_config_from_json(text)
    assert back.gamma == config.gamma
    assert back.n_left == config.n_left
    assert set(nhqw.preset_names()) == {
        "fig2a", "fig2e", "fig3e", "figS2", "figS3", "figS4"}
