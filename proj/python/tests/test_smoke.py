import math

import pytest

import mmwsec


def test_module_metadata():
    assert mmwsec.__version__
    assert "SystemConfig" in dir(mmwsec)


def test_config_and_coefficients():
    cfg = mmwsec.SystemConfig(P_dBm=30.0, k_tx=0.1, k_rx=0.1)
    cfg.validate()
    c = mmwsec.derive_coeffs(cfg, 8.0, 12.0)
    assert c.d == pytest.approx(c.beta_D * 20.0)
    assert c.e == pytest.approx(0.02 * c.d)
    assert c.c == pytest.approx(0.01 * c.a)
    with pytest.raises(mmwsec.DomainError):
        mmwsec.SystemConfig(k_tx=1.5).validate()


def test_sndr_and_outage():
    cfg = mmwsec.SystemConfig(P_dBm=60.0, k_tx=0.1, k_rx=0.1, R_s=6.0)
    c = mmwsec.derive_coeffs(cfg, 8.0, 12.0)
    t = mmwsec.SecrecyTarget(6.0)
    res = mmwsec.sop_overall(0.5, t, c, cfg.N_E - cfg.N_C)
    assert res.branch == "AlwaysOutage"
    assert res.gamma3 == pytest.approx(51.0)
    t2 = mmwsec.SecrecyTarget(2.0)
    lo = mmwsec.tau_min(t2, c)
    p = mmwsec.sop_conditional(0.5 * (1 + lo), t2, c, 10)
    mc = mmwsec.empirical_conditional_sop(0.5 * (1 + lo), t2, c, 10, 100000, 3)
    assert abs(mc.value - p) <= max(0.005, 3 * mc.std_error)


def test_special_functions():
    # Ei(-1) = -0.21938393439552...
    assert mmwsec.exp_integral_ei(-1.0) == pytest.approx(-0.21938393439552029, rel=1e-14)
    with pytest.raises(mmwsec.DomainError):
        mmwsec.exp_integral_ei(1.0)
    # I_0(q) = e^{1/q} E1(1/q); at q = 1: 0.596347362323194...
    assert mmwsec.log_moment(0, 1.0) == pytest.approx(0.5963473623231940, rel=1e-13)


def test_throughput_pieces():
    k = mmwsec.k_max_tau1(2.0, 0.02, 0.01)
    assert math.exp(-k / (2.0 - 0.02 * k)) == pytest.approx(0.01, rel=1e-12)
    cfg = mmwsec.SystemConfig(P_dBm=30.0, N_C=16, k_tx=0.1, k_rx=0.1)
    closed = mmwsec.mrt_throughput(cfg)
    direct = mmwsec.mrt_throughput_direct(cfg)
    assert closed == pytest.approx(direct, rel=1e-8)
    value, se, _ = mmwsec.avg_throughput(cfg, "mrt", 20000, 5)
    assert abs(value - closed) <= 4 * se
    c = mmwsec.derive_coeffs(cfg, 10.0, 4.0)
    r = mmwsec.optimize_tau_throughput(c, cfg.epsilon, cfg.N_E - cfg.N_C)
    assert 0.0 <= r.tau_star <= 1.0


def test_sample_channel_is_seeded():
    cfg = mmwsec.SystemConfig()
    a = mmwsec.sample_channel(cfg, seed=4, count=3)
    b = mmwsec.sample_channel(cfg, seed=4, count=3)
    assert [d.G for d in a] == [d.G for d in b]


def test_validation_suite_passes():
    results = mmwsec.validate(seed=2)
    assert len(results) == 7
    failed = [r for r in results if not r[1]]
    assert not failed, failed
