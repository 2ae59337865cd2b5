// SPDX-License-Identifier: Apache-2.0
//
// mmwsec - secrecy analysis for AN-masked mm-Wave beamforming with impaired hardware
// Copyright (C) 2026 The mmwsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "mmwsec/error.hpp"
#include "mmwsec/rng.hpp"
#include "mmwsec/sndr.hpp"
#include "mmwsec/sop.hpp"
#include "mmwsec/throughput.hpp"
#include "support.hpp"

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>

using namespace mmwsec;

namespace
{
EffectiveCoeffs coeffs(double a, double b, double kt2, double d, double kk)
{
    EffectiveCoeffs k;
    k.a = a;
    k.b = b;
    k.c = kt2 * a;
    k.d = d;
    k.e = kk * d;
    k.k_tx2 = kt2;
    k.k_tot2 = kk;
    return k;
}

SystemConfig fig_config(double P_dBm, double k)
{
    SystemConfig cfg;
    cfg.N_C = 16;
    cfg.P_dBm = P_dBm;
    cfg.k_tx = k;
    cfg.k_rx = k;
    return cfg;
}

// Destination-only gain integrated against its Gamma law: an independent evaluation of the
// inner expectation over G_check of the MRT rate.
double inner_by_quadrature(double G_hat, int n_dc, const EffectiveCoeffs& bar, double eps)
{
    const double beta = std::max(0.0, mrt_transmit_threshold(G_hat, bar, eps));
    const boost::math::gamma_distribution<double> law(n_dc, 1.0);
    auto f = [&](double x) { return boost::math::pdf(law, x) * std::max(0.0, mrt_rate(G_hat, x, bar, eps)); };
    const double hi = boost::math::gamma_q_inv(static_cast<double>(n_dc), 1e-15) + beta;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, beta, hi, 20, 1e-12);
}
} // namespace

TEST_CASE("outage margin function")
{
    const double a = 2.0, b = 0.3, c = 0.02, eps = 0.01;
    CHECK(q_of_k(0.0, 0.6, a, b, c, 5, eps) == doctest::Approx(1.0 - eps));
    CHECK_THROWS_AS(q_of_k(a / (c * 0.5) * 1.01, 0.5, a, b, c, 5, eps), DomainError);
    // strictly decreasing in k
    double prev = q_of_k(0.0, 0.4, a, b, c, 5, eps);
    for (double k = 0.1; k < 20.0; k += 0.1)
    {
        const double q = q_of_k(k, 0.4, a, b, c, 5, eps);
        CHECK(q < prev);
        prev = q;
    }
    // Q is the outage probability at threshold k minus epsilon
    EffectiveCoeffs ec;
    ec.a = a;
    ec.b = b;
    ec.c = c;
    for (double tau : {0.3, 0.8})
        for (double k : {0.5, 3.0})
            CHECK(q_of_k(k, tau, a, b, c, 5, eps) + eps ==
                  doctest::Approx(1.0 - cdf_Y_E(tau * k, tau, ec, 5)).epsilon(1e-12));
}

TEST_CASE("largest leakage threshold at full power")
{
    CHECK(k_max_tau1(3.0, 0.1, 1.0) == 0.0);
    CHECK(k_max_tau1(1.0, 0.0, std::exp(-1.0)) == doctest::Approx(1.0));
    const double a = 2.0, c = 0.02, eps = 0.01;
    const double k = k_max_tau1(a, c, eps);
    // at tau = 1 the artificial-noise term drops and Q(k) = exp(-k/(a - c k)) - eps must vanish
    CHECK(std::exp(-k / (a - c * k)) == doctest::Approx(eps).epsilon(1e-13));
    CHECK(q_of_k(k, 1.0, a, 0.7, c, 4, eps) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(k == doctest::Approx(2.0 * std::log(100.0) / (1.0 + 0.02 * std::log(100.0))).epsilon(1e-14));
    CHECK(k == doctest::Approx(8.43358).epsilon(1e-6));
    // the alternative reading with 1 + c ln(eps) in the denominator does not zero Q
    const double alt = -a * std::log(eps) / (1.0 + c * std::log(eps));
    CHECK(std::abs(std::exp(-alt / (a - c * alt)) - eps) > 1e-3);
    CHECK_THROWS_AS(k_max_tau1(1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("leakage threshold root finding")
{
    const EffectiveCoeffs ec = coeffs(2.0, 0.6, 0.01, 40.0, 0.02);
    const KTauSolver s = KTauSolver::from(ec, 0.01, 6);
    CHECK(solve_k(1.0, s) == doctest::Approx(k_max_tau1(ec.a, ec.c, 0.01)).epsilon(1e-10));
    double prev = 0.0;
    for (int i = 1; i <= 10; ++i)
    {
        const double tau = 0.1 * i;
        const double k = solve_k(tau, s);
        CHECK(k >= prev);
        prev = k;
        // the secrecy constraint binds: P(Y_E > tau k) = eps
        CHECK(1.0 - cdf_Y_E(tau * k, tau, ec, 6) == doctest::Approx(0.01).epsilon(1e-8));
    }
    const KTauSolver loose = KTauSolver::from(ec, 1.0, 6);
    for (double tau : {0.2, 0.7, 1.0})
        CHECK(solve_k(tau, loose) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(solve_k(0.0, s), DomainError);
    CHECK_THROWS_AS(KTauSolver::from(ec, 0.01, 0).validate(), DomainError);
}

TEST_CASE("secrecy rate and its derivatives")
{
    EffectiveCoeffs ideal;
    ideal.d = 10.0;
    CHECK(rs_of_tau(0.0, 3.0, ideal) == 0.0);
    CHECK(rs_of_tau(0.5, 1.0, ideal) == doctest::Approx(2.0).epsilon(1e-14));
    const EffectiveCoeffs ec = coeffs(3.0, 0.8, 0.01, 60.0, 0.02);
    CHECK(rs_of_tau(0.4, 0.0, ec) == doctest::Approx(std::log2(1.0 + sndr_destination(0.4, ec))).epsilon(1e-13));
    CHECK(rs_of_tau(0.4, 2.0, ec) ==
          doctest::Approx(std::log2((1.0 + sndr_destination(0.4, ec)) / (1.0 + 0.8))).epsilon(1e-13));

    const KTauSolver s = [&] {
        KTauSolver x = KTauSolver::from(ec, 0.01, 6);
        x.tol_k = 1e-14;
        return x;
    }();
    for (double tau : {0.1, 0.35, 0.6, 0.9})
    {
        const double h = 1e-5;
        const double k = solve_k(tau, s);
        const double dk = dk_dtau(tau, k, s);
        const double fd_k = (solve_k(tau + h, s) - solve_k(tau - h, s)) / (2 * h);
        CHECK(dk == doctest::Approx(fd_k).epsilon(1e-5));
        const double fd_r = (rs_at(tau + h, ec, s) - rs_at(tau - h, ec, s)) / (2 * h);
        CHECK(drs_dtau(tau, k, dk, ec) == doctest::Approx(fd_r).epsilon(1e-5));
    }
    const double k1 = k_max_tau1(ec.a, ec.c, 0.01);
    CHECK(z_at_unity(ec, s) == doctest::Approx(drs_dtau(1.0, k1, dk_dtau(1.0, k1, s), ec)));
}

TEST_CASE("throughput-optimal split attains the grid maximum")
{
    RngStream rng(211, 0);
    int transmitted = 0, silent = 0;
    for (int i = 0; i < 150; ++i)
    {
        const double scale = std::pow(10.0, 5.0 * rng.uniform() - 1.0);
        const double kt = 0.12 * rng.uniform();
        const double kr = 0.12 * rng.uniform();
        const EffectiveCoeffs ec = coeffs(scale * (0.05 + rng.uniform()), scale * (0.02 + rng.uniform()) / 5.0,
                                          kt * kt, scale * (1.0 + 20.0 * rng.uniform()), kt * kt + kr * kr);
        const KTauSolver s = KTauSolver::from(ec, 0.01, 4);
        const ThroughputResult r = optimize_tau_throughput(ec, s);
        auto f = [&](double tau) { return rs_at(tau, ec, s); };
        const auto [gx, gmax] = testing::grid_max(f, 1e-4, 1.0, 10000);
        if (r.transmit)
        {
            CHECK(r.R_s_star >= gmax - 1e-6);
            CHECK(r.R_s_star == doctest::Approx(f(r.tau_star)).epsilon(1e-9));
            ++transmitted;
        }
        else
        {
            CHECK(gmax <= 1e-6);
            CHECK(r.case_tag == ThroughputCase::Silent);
            ++silent;
        }
    }
    CHECK(transmitted > 50);
}

TEST_CASE("low power puts everything on the information signal")
{
    const EffectiveCoeffs ec = coeffs(0.02, 0.005, 0.01, 0.5, 0.02);
    const ThroughputResult r = optimize_tau_throughput(ec, KTauSolver::from(ec, 0.01, 4));
    CHECK(r.transmit);
    CHECK(r.tau_star == 1.0);
}

TEST_CASE("full-power rate")
{
    SystemConfig cfg = fig_config(40.0, 0.1);
    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    RngStream rng(223, 0);
    for (int i = 0; i < 1000; ++i)
    {
        const double Gh = 30.0 * rng.uniform(), Gc = 30.0 * rng.uniform();
        const EffectiveCoeffs ec = derive_coeffs(cfg, Gh, Gc);
        const double r1 = mrt_rate(Gh, Gc, bar, cfg.epsilon);
        const double r2 = mrt_rate_direct(ec, cfg.epsilon);
        CHECK(std::abs(r1 - r2) <= 1e-10 * std::max(1.0, std::abs(r2)));
    }
    const EffectiveCoeffs ec = derive_coeffs(cfg, 5.0, 9.0);
    const double ideal = std::log2(1.0 + sndr_destination(1.0, ec));
    CHECK(mrt_rate(5.0, 9.0, bar, 1.0) == doctest::Approx(ideal).epsilon(1e-13));
    CHECK(mrt_rate(0.0, 9.0, bar, cfg.epsilon) ==
          doctest::Approx(std::log2(1.0 + sndr_destination(1.0, derive_coeffs(cfg, 0.0, 9.0)))).epsilon(1e-13));
}

TEST_CASE("full-power transmission threshold")
{
    RngStream rng(227, 0);
    for (double k : {0.0, 0.1})
        for (double P : {10.0, 30.0, 60.0})
        {
            const SystemConfig cfg = fig_config(P, k);
            const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
            for (int i = 0; i < 50; ++i)
            {
                const double Gh = 0.5 + 30.0 * rng.uniform();
                const double beta = mrt_transmit_threshold(Gh, bar, cfg.epsilon);
                const double step = 1e-8 * std::max(1.0, std::abs(beta));
                if (beta - step > 0.0)
                    CHECK(mrt_rate(Gh, beta - step, bar, cfg.epsilon) < 0.0);
                CHECK(mrt_rate(Gh, std::max(0.0, beta) + step, bar, cfg.epsilon) > 0.0);
            }
        }
    const EffectiveCoeffs bar = derive_bar_coeffs(fig_config(30.0, 0.1));
    CHECK(mrt_transmit_threshold(4.0, bar, 1.0) <= 0.0);
}

TEST_CASE("closed-form inner expectation matches quadrature")
{
    for (double k : {0.0, 0.1})
        for (double P : {20.0, 50.0})
        {
            const SystemConfig cfg = fig_config(P, k);
            const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
            for (double Gh : {0.3, 4.0, 16.0, 40.0})
            {
                const double closed = mrt_inner_closed_form(Gh, cfg.n_dc(), bar, cfg.epsilon);
                const double quad = inner_by_quadrature(Gh, cfg.n_dc(), bar, cfg.epsilon);
                CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
            }
        }
    CHECK_THROWS_AS(mrt_inner_closed_form(1.0, 0, derive_bar_coeffs(fig_config(30, 0)), 0.01), DomainError);
}

TEST_CASE("average full-power throughput: closed form, nested quadrature and sampling")
{
    for (double k : {0.0, 0.1})
    {
        const SystemConfig cfg = fig_config(30.0, k);
        const double closed = mrt_throughput(cfg);
        const double direct = mrt_throughput_direct(cfg);
        CHECK(closed == doctest::Approx(direct).epsilon(1e-8));
        const ThroughputAverage mc = avg_throughput(cfg, PowerScheme::Mrt, 40000, 5, 0);
        CHECK(std::abs(mc.value - closed) < 4.0 * mc.std_error + 1e-9);
    }
    SystemConfig tight = fig_config(30.0, 0.1);
    tight.epsilon = 1e-12;
    CHECK(mrt_throughput(tight) < mrt_throughput(fig_config(30.0, 0.1)));
    SystemConfig none = fig_config(30.0, 0.1);
    none.N_C = 0;
    CHECK(mrt_throughput(none) == doctest::Approx(mrt_throughput_direct(none)).epsilon(1e-8));
}

TEST_CASE("high-power limit of the leakage threshold")
{
    for (double tau : {0.05, 0.3, 0.7})
    {
        const EffectiveCoeffs unit = coeffs(1.0, 0.4, 0.01, 20.0, 0.02);
        const auto [k_inf, r_inf] = high_snr_k_and_rate(tau, unit, 0.01, 6);
        const double R = std::pow(0.01, -1.0 / 6.0) - 1.0;
        CHECK(k_inf == doctest::Approx(R * 1.0 / ((1.0 - tau) * 0.4 + R * 0.01 * tau)).epsilon(1e-12));
        // k(tau) approaches k_inf once the noise floor is negligible
        const double big = 1e9;
        const EffectiveCoeffs loud = coeffs(big, big * 0.4, 0.01, big * 20.0, 0.02);
        KTauSolver s = KTauSolver::from(loud, 0.01, 6);
        s.tol_k = 1e-12;
        CHECK(solve_k(tau, s) == doctest::Approx(k_inf).epsilon(1e-6));
        CHECK(rs_of_tau(tau, k_inf, loud) == doctest::Approx(r_inf).epsilon(1e-6));
    }
    CHECK_THROWS_AS(high_snr_k_and_rate(0.5, coeffs(1, 1, 0, 1, 0), 0.01, 4), DomainError);
    CHECK_THROWS_AS(high_snr_k_and_rate(1.0, coeffs(1, 1, 0.01, 1, 0.02), 0.01, 4), DomainError);
}

TEST_CASE("average throughput across schemes")
{
    SystemConfig cfg = fig_config(40.0, 0.1);
    const ThroughputAverage opa = avg_throughput(cfg, PowerScheme::Opa, 3000, 9, 1);
    const ThroughputAverage opa4 = avg_throughput(cfg, PowerScheme::Opa, 3000, 9, 4);
    CHECK(opa.value == opa4.value);
    CHECK(opa.std_error == opa4.std_error);
    const ThroughputAverage ep = avg_throughput(cfg, PowerScheme::EqualPower, 3000, 9, 0);
    const ThroughputAverage mrt = avg_throughput(cfg, PowerScheme::Mrt, 3000, 9, 0);
    // same draws: per-draw optimum dominates both fixed splits
    CHECK(opa.value >= ep.value);
    CHECK(opa.value >= mrt.value - 1e-12);
    const ThroughputAverage ref = avg_throughput_reference(cfg, PowerScheme::Opa, 300, 9, 2048, 0);
    const ThroughputAverage opa_small = avg_throughput(cfg, PowerScheme::Opa, 300, 9, 0);
    CHECK(opa_small.value >= ref.value - 1e-6);
    CHECK(opa_small.value == doctest::Approx(ref.value).epsilon(1e-4));
    CHECK(to_string(PowerScheme::EqualPower) == "equal_power");
    CHECK_THROWS_AS(avg_throughput(cfg, PowerScheme::Opa, 0, 1), DomainError);
}

TEST_CASE("leakage threshold is monotone only for moderate transmit distortion")
{
    // one AN direction, strong transmit distortion: k(tau) dips just above tau = 0
    const double a = 74.9685, b = 78.4763;
    KTauSolver severe;
    severe.epsilon = 0.01;
    severe.n_ec = 1;
    severe.a = a;
    severe.b = b;
    severe.c = 0.0205 * a;
    severe.tol_k = 1e-12;
    const double k1 = solve_k(1e-4, severe), k2 = solve_k(2e-4, severe);
    CHECK(k2 < k1);
    CHECK(dk_dtau(1e-4, k1, severe) < 0.0);

    KTauSolver moderate = severe;
    moderate.c = 0.01 * a;
    double prev = 0.0;
    for (int i = 1; i <= 1000; ++i)
    {
        const double k = solve_k(i / 1000.0, moderate);
        CHECK(k >= prev);
        prev = k;
    }
}
