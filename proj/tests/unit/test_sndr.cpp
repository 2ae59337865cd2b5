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
#include "mmwsec/sndr.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace mmwsec;

namespace
{
EffectiveCoeffs coeffs(double a, double b, double c, double d, double e)
{
    EffectiveCoeffs k;
    k.a = a;
    k.b = b;
    k.c = c;
    k.d = d;
    k.e = e;
    return k;
}
} // namespace

TEST_CASE("destination SNDR")
{
    const EffectiveCoeffs k = coeffs(1, 2, 0.01, 10, 0.2);
    CHECK(sndr_destination(0.0, k) == 0.0);
    CHECK(sndr_destination(0.5, k) == doctest::Approx(5.0 / 1.1).epsilon(1e-14));
    CHECK(sndr_destination(1.0, coeffs(1, 2, 0, 10, 0)) == doctest::Approx(10.0));
}

TEST_CASE("eavesdropper SNDR")
{
    const EffectiveCoeffs k = coeffs(1, 2, 0.01, 10, 0.2);
    CHECK(sndr_eve(0.5, 0.0, 1.0, k) == 0.0);
    CHECK(sndr_eve(0.5, 1.0, 1.0, k) == doctest::Approx(0.5 / 2.005).epsilon(1e-14));
    CHECK(sndr_eve(1.0, 0.7, 3.0, coeffs(2, 2, 0, 10, 0)) == doctest::Approx(1.4));
    const SndrPair p = sndr_pair(0.5, 1.0, 1.0, k);
    CHECK(p.y_D == sndr_destination(0.5, k));
    CHECK(p.y_E == sndr_eve(0.5, 1.0, 1.0, k));
}

TEST_CASE("ideal-hardware forms agree with the general forms at zero EVM")
{
    EffectiveCoeffs k = coeffs(0.8, 0.0, 0.0, 12.0, 0.0);
    k.beta_E = 3.0;
    const int n_ec = 7;
    k.b = k.beta_E / n_ec;
    for (double tau : {0.1, 0.4, 0.9})
    {
        CHECK(sndr_destination_ideal(tau, k) == doctest::Approx(sndr_destination(tau, k)).epsilon(1e-14));
        CHECK(sndr_eve_ideal(tau, 1.3, 5.5, k, n_ec) == doctest::Approx(sndr_eve(tau, 1.3, 5.5, k)).epsilon(1e-14));
    }
}

TEST_CASE("impairment ceiling")
{
    CHECK(high_snr_ceiling(0.02) == doctest::Approx(50.0));
    CHECK(high_snr_ceiling(1.0) == 1.0);
    CHECK(high_snr_ceiling(0.0) == std::numeric_limits<double>::infinity());
    // The destination SNDR saturates at the ceiling once d >> 1/k^2
    const double kk = 0.02;
    const double d = 100.0 / kk * 100.0;
    const EffectiveCoeffs k = coeffs(1, 1, 0, d, kk * d);
    CHECK(std::abs(sndr_destination(1.0, k) / high_snr_ceiling(kk) - 1.0) < 0.01);
}
