"""Smoke tests for the Python surface of the native core."""

import json
import math

import pytest

sbrsma = pytest.importorskip("sbrsma")


def test_distribution_helpers():
    assert sbrsma.exp_pdf(0.0, 1.0) == pytest.approx(1.0)
    assert sbrsma.exp_pdf(2.0, 0.5) == pytest.approx(0.5 * math.exp(-1.0))
    assert sbrsma.upper_gamma_int(3, 2.0) == pytest.approx(10.0 * math.exp(-2.0))
    assert sbrsma.tau_ccdf(0.0, 4, 0.5) == pytest.approx(1.0)


def test_config_defaults_and_json():
    cfg = sbrsma.config_from_json("")
    assert cfg.antennas == 4
    assert cfg.psi == pytest.approx(10.0)
    blob = json.loads(cfg.to_json())
    assert blob["alpha_c"] == pytest.approx(0.5)
    cfg2 = sbrsma.config_from_json('{"L": 5, "Psi_dB": 20}')
    assert cfg2.antennas == 5
    assert cfg2.psi == pytest.approx(100.0)
    with pytest.raises(ValueError):
        sbrsma.config_from_json('{"alpha_c": 0.9}')


def test_theorem_constants():
    cfg = sbrsma.config_from_json("")
    c = sbrsma.theorem_constants(cfg, 1)
    assert c["pi_k"] == pytest.approx(10.0 / 3.0)
    assert c["beta0"] == pytest.approx(0.03125)


def test_closed_form_and_mc_agree_roughly():
    cfg = sbrsma.config_from_json('{"Psi_dB": 10}')
    cf = sbrsma.sop_closed_form(cfg)
    assert 0.0 < cf < 1.0
    est = sbrsma.estimate_sop(cfg, "ccs", trials=20000, seed=3)
    assert abs(est["sop"] - cf) < 5.0 * max(est["std_error"], 1e-9)


def test_estimates_are_reproducible():
    cfg = sbrsma.config_from_json("")
    a = sbrsma.estimate_sop(cfg, "mcs", trials=5000, seed=11, workers=1)
    b = sbrsma.estimate_sop(cfg, "mcs", trials=5000, seed=11, workers=4)
    assert a["sop"] == b["sop"]


def test_foxh_identity():
    value, rel_err = sbrsma.foxh_uni([], [(0.0, 1.0)], 1, 0, 1.0)
    assert value == pytest.approx(math.exp(-1.0), rel=1e-8)
    assert rel_err < 1e-8


def test_xi_paths_agree():
    c = sbrsma.theorem_constants(sbrsma.config_from_json(""), 2)
    a = sbrsma.xi_quadrature(1, 2, 1, c["beta0"], c["beta_k"], c["beta_jk"])
    b = sbrsma.xi_foxh(1, 2, 1, c["beta0"], c["beta_k"], c["beta_jk"])
    assert b == pytest.approx(a, rel=1e-6)


def test_delta_range_and_fixed_delta():
    cfg = sbrsma.config_from_json('{"Psi_dB": 20}')
    feasible, lo, hi = sbrsma.delta_range(8.0, 5.0, 6.0, 2.0, 4.0, cfg)
    assert feasible and 0.0 < lo < hi <= 1.0
    est = sbrsma.estimate_fixed_delta_sop(cfg, "ccs", 0.3, trials=5000, seed=2)
    assert 0.0 <= est["sop"] <= 1.0
