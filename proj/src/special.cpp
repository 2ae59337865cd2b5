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
#include "mmwsec/special.hpp"

#include "mmwsec/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace mmwsec
{

namespace
{

constexpr double kSeriesLimit = 2.0;
constexpr int kMaxIterations = 100000;

// e^z E1(z) by the modified-Lentz continued fraction; converges for z > ~1.
template <class T>
T scaled_e1_cf(T z)
{
    const T tiny = std::numeric_limits<T>::min() / std::numeric_limits<T>::epsilon();
    const T eps = std::numeric_limits<T>::epsilon();
    T b = z + 1;
    T c = 1 / tiny;
    T d = 1 / b;
    T h = d;
    for (int i = 1; i < kMaxIterations; ++i)
    {
        const T a = -static_cast<T>(i) * i;
        b += 2;
        d = 1 / (a * d + b);
        c = b + a / c;
        const T del = c * d;
        h *= del;
        if (std::abs(del - 1) <= eps)
            return h;
    }
    throw ConvergenceError("exponential integral: continued fraction did not converge");
}

// E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k k!)
template <class T>
T e1_series(T z)
{
    const T euler = static_cast<T>(0.577215664901532860606512090082402431L);
    T term = 1;
    T sum = 0;
    for (int k = 1; k < 1000; ++k)
    {
        term *= -z / k;
        const T add = term / k;
        sum += add;
        if (std::abs(add) <= std::numeric_limits<T>::epsilon() * std::abs(sum))
            break;
    }
    return -euler - std::log(z) - sum;
}

template <class T>
T scaled_e1_impl(T z)
{
    if (z <= static_cast<T>(kSeriesLimit))
        return std::exp(z) * e1_series(z);
    return scaled_e1_cf(z);
}

// e^z Gamma(-k, z) z^k via Legendre's continued fraction, z > 0.
long double upper_gamma_cf(int k, long double z)
{
    const long double a = -static_cast<long double>(k);
    const long double tiny = std::numeric_limits<long double>::min() / std::numeric_limits<long double>::epsilon();
    const long double eps = std::numeric_limits<long double>::epsilon();
    long double b = z + 1 - a;
    long double c = 1 / tiny;
    long double d = 1 / b;
    long double h = d;
    for (int i = 1; i < kMaxIterations; ++i)
    {
        const long double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1 / d;
        const long double del = d * c;
        h *= del;
        if (std::abs(del - 1) <= eps)
            return h;
    }
    throw ConvergenceError("incomplete gamma: continued fraction did not converge");
}

} // namespace

double scaled_e1(double z)
{
    if (!(z > 0.0))
        throw DomainError("scaled_e1: argument must be positive");
    return scaled_e1_impl<double>(z);
}

double exp_integral_ei(double x)
{
    if (!(x < 0.0))
        throw DomainError("exp_integral_ei: only negative arguments are supported");
    const double z = -x;
    if (z <= kSeriesLimit)
        return -e1_series(z);
    return -scaled_e1_cf(z) * std::exp(-z);
}

double log_moment_ei_sum(int m, double q)
{
    if (m < 0 || !(q >= 0.0))
        throw DomainError("log_moment: need m >= 0 and q >= 0");
    if (q == 0.0)
        return 0.0;
    const long double ql = q;
    const long double inv_q = 1 / ql;
    // e^{1/q} Ei(-1/q) = -e^{z} E1(z)
    const long double ei_term = -scaled_e1_impl<long double>(inv_q);

    long double total = 0;
    long double k_fact = 1;
    for (int k = 0; k <= m; ++k)
    {
        if (k > 0)
            k_fact *= k;
        const long double sign_k = (k % 2 == 0) ? -1 : 1; // (-1)^{k-1}
        long double inner = sign_k * std::pow(inv_q, static_cast<long double>(k)) * ei_term;
        long double j_fact = 1; // (j-1)!
        for (int j = 1; j <= k; ++j)
        {
            if (j > 1)
                j_fact *= (j - 1);
            const int p = k - j;
            const long double sign = (p % 2 == 0) ? 1 : -1;
            inner += j_fact * sign * std::pow(inv_q, static_cast<long double>(p));
        }
        total += inner / k_fact;
    }
    long double m_fact = 1;
    for (int k = 2; k <= m; ++k)
        m_fact *= k;
    return static_cast<double>(m_fact * total);
}

double log_moment_incomplete_gamma(int m, double q)
{
    if (m < 0 || !(q >= 0.0))
        throw DomainError("log_moment: need m >= 0 and q >= 0");
    if (q == 0.0)
        return 0.0;
    const long double ql = q;
    const long double z = 1 / ql;
    // L_k = int x^k e^{-x} / (1 + q x) dx = k! z e^z Gamma(-k, z) z^k
    // I_k = k I_{k-1} + q L_k, I_{-1} = 0; every term is positive.
    long double I = 0;
    long double k_fact = 1;
    for (int k = 0; k <= m; ++k)
    {
        if (k > 0)
            k_fact *= k;
        const long double L = (k == 0) ? z * scaled_e1_impl<long double>(z) : k_fact * z * upper_gamma_cf(k, z);
        I = k * I + ql * L;
    }
    return static_cast<double>(I);
}

double log_moment(int m, double q)
{
    if (m < 0 || !(q >= 0.0))
        throw DomainError("log_moment: need m >= 0 and q >= 0");
    if (q == 0.0)
        return 0.0;
    // the Ei sum loses about m log10(1/q) digits to cancellation
    const double lost_digits = m * std::log10(1.0 / q);
    if (lost_digits <= 5.0)
        return log_moment_ei_sum(m, q);
    return log_moment_incomplete_gamma(m, q);
}

double gamma_cdf_int(int n, double x)
{
    if (n < 1)
        throw DomainError("gamma_cdf_int: shape must be a positive integer");
    if (x <= 0.0)
        return 0.0;
    if (x < n)
    {
        // e^{-x} x^n / n! sum_k x^k / ((n+1)...(n+k)): no cancellation below the mode
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 1000 && term > 1e-17 * sum; ++k)
        {
            term *= x / (n + k);
            sum += term;
        }
        return std::exp(n * std::log(x) - x - std::lgamma(n + 1.0)) * sum;
    }
    // 1 - e^{-x} sum_{k<n} x^k / k!
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < n; ++k)
    {
        term *= x / k;
        sum += term;
    }
    const double tail = std::exp(-x) * sum;
    return tail >= 1.0 ? 0.0 : 1.0 - tail;
}

} // namespace mmwsec
