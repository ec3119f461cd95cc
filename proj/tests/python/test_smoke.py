# Copyright (c) secsim contributors
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python bindings. The heavy numerical verification
lives in the C++ unit and acceptance suites; here we check that the module
surface is wired up and produces the same deterministic results."""

import math

import pytest

import secsim


def make_config(scheme=None, m=4, n=2, rho2=0.9):
    cfg = secsim.SystemConfig()
    cfg.scheme = scheme if scheme is not None else secsim.Scheme.traditional
    cfg.alice_antennas = m
    cfg.relay_antennas = n
    cfg.rho2 = rho2
    cfg.power = secsim.db_to_linear(3.0)
    return cfg


def test_special_functions():
    assert secsim.exp_int(2, 0.0) == 1.0
    assert secsim.exp_int(5, 0.0) == 0.25
    assert secsim.exp_int(1, 1.0) == pytest.approx(0.21938393439552027, abs=1e-10)
    glog = secsim.gamma_log_integral(1.0, 1)
    assert glog == pytest.approx(0.8603473822708859, abs=1e-10)
    assert abs(glog - secsim.quad_log_gamma_oracle(1.0, 1)) <= 1e-8
    with pytest.raises(Exception):
        secsim.exp_int(1, 0.0)


def test_random_stream_determinism():
    a = secsim.RandomStream(42)
    b = secsim.RandomStream(42)
    assert [a.uniform() for _ in range(5)] == [b.uniform() for _ in range(5)]
    assert a.fork(3).uniform() == b.fork(3).uniform()


def test_channel_sampling():
    cfg = make_config(rho2=0.5)
    rng = secsim.RandomStream(7)
    ch = secsim.sample_main_pair(cfg, rng)
    assert len(ch.h_ab) == 4
    assert ch.rho2_realized == pytest.approx(0.5, abs=1e-10)
    assert ch.g_b == pytest.approx(sum(abs(z) ** 2 for z in ch.h_ab), rel=1e-12)
    basis = secsim.null_space_basis(ch.h_ab)
    assert len(basis) == 3


def test_snr_and_outage():
    cfg = make_config(rho2=1.0)
    cfg.power = 2.0
    snrs = secsim.snr_traditional(0.5, cfg, 0.0, 3.0)
    assert snrs.eve == pytest.approx(3.0)
    assert secsim.secrecy_capacity(2.0, 0.5) == 1.5
    assert secsim.outage_indicator(snrs, 0.0)  # bob at zero SNR


def test_curve_and_allocation():
    cfg = make_config()
    curve = secsim.build_curve(cfg, 101, 10000, seed=3)
    assert curve.method == secsim.CurveMethod.closed_form
    assert curve.values[0] == 0.0
    assert all(b >= a for a, b in zip(curve.values, curve.values[1:]))
    assert curve.value_at(1.0) == pytest.approx(curve.values[-1])

    res = secsim.optimize_ratio(2.0, curve, cfg)
    assert 0.0 <= res.ratio <= 1.0
    expected = math.log2(1.0 + res.ratio * cfg.power * 2.0) - curve.value_at(res.ratio)
    assert res.objective == pytest.approx(expected, abs=1e-9)

    cfg0 = make_config(rho2=0.0)
    curve0 = secsim.build_curve(cfg0, 101, 10000, seed=3)
    assert secsim.optimize_ratio(1.7, curve0, cfg0).boundary == secsim.Boundary.at_one


def test_outage_estimate_deterministic():
    cfg = make_config()
    curve = secsim.build_curve(cfg, 101, 10000, seed=2)
    a = secsim.estimate_outage(cfg, curve, 20000, seed=9, workers=1)
    b = secsim.estimate_outage(cfg, curve, 20000, seed=9, workers=3)
    assert a.p_out == b.p_out
    assert a.trials == 20000
    assert 0.0 <= a.p_out <= 1.0
    lo, hi = a.wilson_ci95()
    assert lo <= a.p_out <= hi


def test_sweep_preset_roundtrip():
    spec = secsim.preset_spec("fig4")
    assert len(spec.points) == 11
    spec.trials = 1000
    spec.curve_mc_samples = 10000
    spec.points = [0.0, 1.0]
    result = secsim.run_sweep(spec)
    assert len(result.rows) == 2 * 2 * 3
    csv = secsim.csv_string(result)
    header = "axis,value,scheme,M,N,p_out,ci95,trials,seed"
    assert header in csv
    assert "fig4" in csv
    assert result.curve_builds == 12


def test_validation_fast_passes():
    checks = secsim.run_validation("fast")
    failed = [name for name, passed, _ in checks if not passed]
    assert failed == []
