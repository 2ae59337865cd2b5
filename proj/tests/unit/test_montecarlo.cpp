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
#include "mmwsec/montecarlo.hpp"
#include "mmwsec/sndr.hpp"
#include "mmwsec/sop.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace mmwsec;

namespace
{
SystemConfig sop_config(double k, int N_C)
{
    SystemConfig cfg;
    cfg.P_dBm = 60.0;
    cfg.N_C = N_C;
    cfg.k_tx = k;
    cfg.k_rx = k;
    return cfg;
}
} // namespace

TEST_CASE("conditional outage: sampling agrees with the closed form")
{
    const SystemConfig cfg = sop_config(0.05, 10);
    const EffectiveCoeffs c = derive_coeffs(cfg, 9.0, 11.0);
    const SecrecyTarget t = SecrecyTarget::from_rate(3.0);
    for (double tau : {0.3, 0.7})
    {
        const double p = sop_conditional(tau, t, c, cfg.n_ec());
        const McEstimate mc = empirical_conditional_sop(tau, t, c, cfg.n_ec(), 200000, 3, 0);
        CHECK(std::abs(mc.value - p) <= std::max(0.005, 3.0 * mc.std_error));
        CHECK(mc.n == 200000);
    }
}

TEST_CASE("sampled eavesdropper CDF agrees with the closed form")
{
    const SystemConfig cfg = sop_config(0.1, 10);
    const EffectiveCoeffs c = derive_coeffs(cfg, 9.0, 11.0);
    const std::vector<double> grid = {1.0, 10.0, 100.0, 1000.0, 5000.0};
    const auto mc = empirical_cdf_Y_E(0.4, c, cfg.n_ec(), grid, 100000, 5, 0);
    REQUIRE(mc.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(mc[i].value - cdf_Y_E(grid[i], 0.4, c, cfg.n_ec())) <= 0.005);
}

TEST_CASE("estimators are deterministic across worker counts")
{
    const SystemConfig cfg = sop_config(0.05, 8);
    const SopEstimate a = empirical_sop(cfg, TauRule::optimal(), 9000, 21, 1);
    const SopEstimate b = empirical_sop(cfg, TauRule::optimal(), 9000, 21, 5);
    CHECK(a.sop.value == b.sop.value);
    CHECK(a.sop.std_error == b.sop.std_error);
    CHECK(a.accept_rate == b.accept_rate);
    const SopEstimate c = empirical_sop(cfg, TauRule::optimal(), 9000, 22, 1);
    CHECK(c.sop.value != a.sop.value);
}

TEST_CASE("region average of the closed form matches sampling")
{
    for (double k : {0.0, 0.1})
    {
        const SystemConfig cfg = sop_config(k, 10);
        const SopEstimate an = analytic_sop(cfg, TauRule::optimal(), 20000, 4, 0);
        const SopEstimate mc = empirical_sop(cfg, TauRule::optimal(), 20000, 4, 0);
        CHECK(an.status == McStatus::Ok);
        CHECK(std::abs(an.sop.value - mc.sop.value) <= std::max(0.005, 3.0 * std::hypot(an.sop.std_error, mc.sop.std_error)));
        CHECK(an.accept_rate == mc.accept_rate);
    }
}

TEST_CASE("no common paths means no leakage")
{
    const SystemConfig cfg = sop_config(0.05, 0);
    const SopEstimate mc = empirical_sop(cfg, TauRule::fixed(0.6), 5000, 2, 0);
    CHECK(mc.sop.value == 0.0);
    const SopEstimate an = analytic_sop(cfg, TauRule::fixed(0.6), 5000, 2, 0);
    CHECK(an.sop.value == 0.0);
}

TEST_CASE("targets above the impairment ceiling are always in outage")
{
    SystemConfig cfg = sop_config(0.1, 10);
    cfg.R_s = 6.0;
    const SopEstimate an = analytic_sop(cfg, TauRule::optimal(), 2000, 2, 0);
    CHECK(an.sop.value == 1.0);
    CHECK(an.accept_rate == 1.0);
}

TEST_CASE("an empty transmission region is reported")
{
    SystemConfig cfg = sop_config(0.0, 10);
    cfg.P_dBm = -40.0;
    const SopEstimate an = analytic_sop(cfg, TauRule::optimal(), 10, 2, 1);
    CHECK(an.status != McStatus::Ok);
    CHECK_THROWS_AS(empirical_sop(cfg, TauRule::optimal(), 0, 2, 1), DomainError);
}

TEST_CASE("distortion synthesis reproduces the closed-form SNDRs")
{
    SystemConfig ideal = sop_config(0.0, 10);
    ideal.M = 64;
    ideal.P_dBm = 20.0;
    const DistortionSndr d0 = empirical_sndr_from_distortion(ideal, 0.6, 20000, 3);
    CHECK(d0.an_leakage < 1e-10);
    CHECK(std::abs(d0.y_D_hat - d0.y_D_model) <= 3.0 * d0.y_D_se);
    CHECK(std::abs(d0.y_E_hat - d0.y_E_model) <= 3.0 * d0.y_E_se);

    SystemConfig hw = ideal;
    hw.k_tx = 0.1;
    hw.k_rx = 0.1;
    for (double tau : {0.4, 1.0})
    {
        const DistortionSndr d = empirical_sndr_from_distortion(hw, tau, 100000, 7);
        CHECK(std::abs(d.y_D_hat - d.y_D_model) <= 3.0 * d.y_D_se);
        CHECK(std::abs(d.y_E_hat - d.y_E_model) <= 3.0 * d.y_E_se);
    }
}
