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
#ifndef MMWSEC_SPECIAL_HPP
#define MMWSEC_SPECIAL_HPP

namespace mmwsec
{

// Exponential integral Ei(x) for x < 0 (equals -E1(-x)). Power series for
// |x| <= 2, continued fraction beyond. Throws DomainError for x >= 0.
double exp_integral_ei(double x);

// e^z E1(z) for z > 0, finite for arbitrarily large z.
double scaled_e1(double z);

// Integral over x in [0, inf) of x^m e^{-x} ln(1 + q x), for q >= 0.
//
// Closed form through Ei(-1/q):
//   m! sum_{k=0..m} 1/k! [ (-1)^{k-1} q^{-k} e^{1/q} Ei(-1/q)
//                          + sum_{j=1..k} (j-1)! (-1/q)^{k-j} ]
// which cancels badly once q^{-m} is large; there the incomplete-gamma
// continued fraction route is used instead.
double log_moment(int m, double q);

// The two routes, exposed for cross-checks.
double log_moment_ei_sum(int m, double q);
double log_moment_incomplete_gamma(int m, double q);

// Regularised lower incomplete gamma P(n, x) for integer n >= 1 (Gamma(n,1) CDF).
double gamma_cdf_int(int n, double x);

} // namespace mmwsec

#endif
