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
#include "mmwsec/config.hpp"
#include "mmwsec/error.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace mmwsec;

TEST_CASE("path loss follows the log-distance model")
{
    CHECK(path_loss_linear(1.0, 0.0, 2.0) == doctest::Approx(1.0));
    CHECK(path_loss_linear(10.0, 0.0, 2.0) == doctest::Approx(0.01).epsilon(1e-14));
    // 61.4 + 20 log10(100) = 101.4 dB
    CHECK(path_loss_linear(100.0, 61.4, 2.0) == doctest::Approx(std::pow(10.0, -10.14)).epsilon(1e-12));
    CHECK(path_loss_linear(100.0, 61.4, 2.0) == doctest::Approx(7.244e-11).epsilon(1e-3));
    CHECK_THROWS_AS(path_loss_linear(0.0, 61.4, 2.0), DomainError);
    CHECK_THROWS_AS(path_loss_linear(-3.0, 61.4, 2.0), DomainError);
}

TEST_CASE("dBm conversion round-trips")
{
    for (double dbm : {-50.0, -3.3, 0.0, 5.0, 30.0, 90.0})
        CHECK(watt_to_dbm(dbm_to_watt(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
    CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0));
    CHECK(dbm_to_watt(0.0) == doctest::Approx(1e-3));
}

TEST_CASE("default configuration coefficients match hand arithmetic")
{
    SystemConfig cfg;
    const double G = 20.0, G_hat = 8.0, G_check = 12.0;
    const EffectiveCoeffs c = derive_coeffs(cfg, G_hat, G_check);
    // beta = P M alpha / (N sigma^2): P/sigma^2 = 55 dB, alpha = -101.4 dB, M/N = 5
    const double beta = 5.0 * std::pow(10.0, (55.0 - 101.4) / 10.0);
    CHECK(c.beta_D == doctest::Approx(beta).epsilon(1e-12));
    CHECK(c.beta_E == doctest::Approx(beta).epsilon(1e-12));
    CHECK(c.d == doctest::Approx(beta * G).epsilon(1e-12));
    CHECK(c.a == doctest::Approx(beta * G_hat / G).epsilon(1e-12));
    CHECK(c.b == doctest::Approx(beta / 10.0).epsilon(1e-12));
    CHECK(c.c == 0.0);
    CHECK(c.e == 0.0);
    CHECK(c.k_tot2 == 0.0);
}

TEST_CASE("impairments enter the coefficients as squared EVM")
{
    SystemConfig cfg;
    cfg.k_tx = 0.1;
    cfg.k_rx = 0.2;
    const EffectiveCoeffs c = derive_coeffs(cfg, 3.0, 5.0);
    CHECK(c.k_tx2 == doctest::Approx(0.01));
    CHECK(c.k_tot2 == doctest::Approx(0.05));
    CHECK(c.c == doctest::Approx(0.01 * c.a));
    CHECK(c.e == doctest::Approx(0.05 * c.d));
    CHECK(c.b == doctest::Approx(c.beta_E * 1.01 / cfg.n_ec()));

    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    const EffectiveCoeffs scaled = scale_coeffs(bar, 3.0, 5.0);
    CHECK(scaled.a == doctest::Approx(c.a).epsilon(1e-14));
    CHECK(scaled.d == doctest::Approx(c.d).epsilon(1e-14));
    CHECK(scaled.e == doctest::Approx(c.e).epsilon(1e-14));
}

TEST_CASE("no common paths gives a = 0")
{
    SystemConfig cfg;
    cfg.N_C = 0;
    const EffectiveCoeffs c = derive_coeffs(cfg, 0.0, 17.0);
    CHECK(c.a == 0.0);
    CHECK(c.c == 0.0);
    CHECK(c.d > 0.0);
}

TEST_CASE("configuration invariants are enforced")
{
    SystemConfig cfg;
    cfg.N_C = 20; // N_E - N_C = 0
    CHECK_NOTHROW(cfg.validate());
    CHECK_THROWS_AS(derive_coeffs(cfg, 5.0, 0.0), InfeasibleError);

    cfg = SystemConfig{};
    cfg.N_D = 101;
    CHECK_THROWS_AS(cfg.validate(), DomainError);

    cfg = SystemConfig{};
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);

    cfg = SystemConfig{};
    cfg.k_tx = -0.1;
    CHECK_THROWS_AS(cfg.validate(), DomainError);

    cfg = SystemConfig{};
    cfg.d_E_m = 0.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);

    CHECK_NOTHROW(SystemConfig{}.validate());
}

TEST_CASE("key = value parsing and printing")
{
    std::istringstream in("# comment\nM = 64\nP_dBm=30  # trailing\nk_tx = 0.05\nfoo = bar\n");
    std::map<std::string, std::string> extra;
    const SystemConfig cfg = parse_config(in, &extra);
    CHECK(cfg.M == 64);
    CHECK(cfg.P_dBm == 30.0);
    CHECK(cfg.k_tx == 0.05);
    REQUIRE(extra.count("foo") == 1);
    CHECK(extra["foo"] == "bar");

    std::ostringstream out;
    write_config(out, cfg);
    std::istringstream back(out.str());
    const SystemConfig again = parse_config(back);
    for (const auto& key : config_keys())
        CHECK(get_config_value(again, key) == get_config_value(cfg, key));

    std::istringstream bad("nonsense = 1\n");
    CHECK_THROWS_AS(parse_config(bad), DomainError);
    SystemConfig c2;
    CHECK_THROWS_AS(set_config_value(c2, "M", "abc"), DomainError);
    CHECK_THROWS_AS(set_config_value(c2, "M", "3.5"), DomainError);
    CHECK_THROWS_AS(set_config_value(c2, "no_such_key", "1"), DomainError);
}
