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
#include "mmwsec/special.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>

#include <cmath>

using namespace mmwsec;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace
{
// I_m(q) = int_0^inf x^m e^{-x} ln(1 + q x) dx
double log_moment_by_quadrature(int m, double q)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double x) {
        if (x > 740.0)
            return 0.0;
        return std::exp(m * std::log(x) - x) * std::log1p(q * x);
    };
    return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
}
} // namespace

TEST_CASE("exponential integral against 50-digit reference")
{
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        // log-spaced |x| in [1e-12, 700]
        const double mag = std::pow(10.0, -12.0 + (std::log10(700.0) + 12.0) * i / 999.0);
        const double x = -mag;
        const Big ref = boost::math::expint(Big(x));
        const double got = exp_integral_ei(x);
        const double rel = std::abs(static_cast<double>((Big(got) - ref) / ref));
        worst = std::max(worst, rel);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("exponential integral by direct series")
{
    // Ei(x) = gamma + ln|x| + sum x^k / (k k!)
    long double s = 0.0L, term = 1.0L;
    const long double x = -1.0L;
    for (int k = 1; k <= 50; ++k)
    {
        term *= x / k;
        s += term / k;
    }
    const long double ref = 0.57721566490153286060651209L + s;
    CHECK(exp_integral_ei(-1.0) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-15));
    // small arguments: gamma + ln|x| + x + O(x^2)
    CHECK(exp_integral_ei(-1e-10) == doctest::Approx(0.5772156649015329 + std::log(1e-10) - 1e-10).epsilon(1e-14));
    CHECK_THROWS_AS(exp_integral_ei(0.0), DomainError);
    CHECK_THROWS_AS(exp_integral_ei(1.0), DomainError);
    CHECK(scaled_e1(3.0) == doctest::Approx(std::exp(3.0) * boost::math::expint(1, 3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(scaled_e1(0.0), DomainError);
}

TEST_CASE("logarithmic moments: both routes against quadrature")
{
    for (int m : {0, 1, 3, 7, 15})
        for (double q : {1e-4, 1e-2, 0.3, 2.0, 50.0})
        {
            const double ref = log_moment_by_quadrature(m, q);
            CHECK(log_moment(m, q) == doctest::Approx(ref).epsilon(1e-10));
            CHECK(log_moment_incomplete_gamma(m, q) == doctest::Approx(ref).epsilon(1e-10));
            if (m * std::log10(1.0 / q) <= 5.0)
                CHECK(log_moment_ei_sum(m, q) == doctest::Approx(ref).epsilon(1e-9));
        }
    CHECK(log_moment(4, 0.0) == 0.0);
    CHECK_THROWS_AS(log_moment(-1, 0.5), DomainError);
    CHECK_THROWS_AS(log_moment(2, -0.5), DomainError);
    // m = 0 identity: e^{1/q} E1(1/q)
    const double q = 0.7;
    CHECK(log_moment(0, q) == doctest::Approx(std::exp(1.0 / q) * boost::math::expint(1, 1.0 / q)).epsilon(1e-13));
}

TEST_CASE("integer-shape Gamma CDF")
{
    for (int n : {1, 2, 5, 20})
        for (double x : {0.01, 0.5, 3.0, 18.0, 60.0})
            CHECK(gamma_cdf_int(n, x) == doctest::Approx(boost::math::gamma_p(double(n), x)).epsilon(1e-12));
    CHECK(gamma_cdf_int(3, 0.0) == 0.0);
    CHECK_THROWS_AS(gamma_cdf_int(0, 1.0), DomainError);
}
