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
#ifndef MMWSEC_OPA_SOP_HPP
#define MMWSEC_OPA_SOP_HPP

#include "mmwsec/config.hpp"
#include "mmwsec/sop.hpp"

#include <string_view>
#include <vector>

namespace mmwsec
{

// Which eavesdropper variables enter phi. The source never observes (u, v);
// MeanSubstitution plugs in E[u] = 1 and E[v] = N_{E-C}, Oracle uses given values.
struct UvPolicy
{
    enum class Kind
    {
        MeanSubstitution,
        Oracle
    };
    Kind kind = Kind::MeanSubstitution;
    double u = 1.0;
    double v = 1.0;

    static UvPolicy mean(int n_ec) { return {Kind::MeanSubstitution, 1.0, static_cast<double>(n_ec)}; }
    static UvPolicy oracle(double u, double v) { return {Kind::Oracle, u, v}; }
};

// phi(tau) = (c1 tau^2 + c2 tau + c3) / (c4 tau^2 + c5 tau + c6); dphi/dtau has
// numerator eps1 tau^2 + eps2 tau + eps3.
struct PhiCoeffs
{
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0;
    double eps1 = 0, eps2 = 0, eps3 = 0;
};

PhiCoeffs phi_coeffs(double u, double v, const EffectiveCoeffs& c);

// (1 + Y_D(tau)) / (1 + Y_E(tau)) evaluated from the SNDR formulas.
double phi(double tau, double u, double v, const EffectiveCoeffs& c);
// Same quantity from the rational form.
double phi_rational(double tau, const PhiCoeffs& pc);
double omega(double tau, const PhiCoeffs& pc);

// Real zeros of Omega, ascending. Empty when the discriminant is negative;
// a single entry when Omega is (numerically) linear.
std::vector<double> omega_roots(const PhiCoeffs& pc);

enum class OpaCase
{
    BothPositiveOrBothNegative, // Omega(tau_min) Omega(1) > 0: compare endpoints and stationary points
    ConvexEndpoints,            // Omega(tau_min) < 0 < Omega(1)
    ConcaveInterior,            // Omega(tau_min) > 0 > Omega(1): interior maximum
    DegenerateLinear,           // eps1 ~ 0
    GridFallback                // analytic pick lost to the validation grid
};

std::string_view to_string(OpaCase c);

struct OpaResult
{
    double tau_star = 1.0;
    OpaCase case_tag = OpaCase::BothPositiveOrBothNegative;
    double objective_value = 0.0; // phi(tau_star) under the policy's (u, v)
    double tau_min = 0.0;
    double omega_at_tau_min = 0.0;
    double omega_at_one = 0.0;
};

struct OpaOptions
{
    // Uniform validation grid on [tau_min, 1]; 0 disables the fallback check.
    int validation_points = 1024;
    // Relative phi gap that triggers GridFallback.
    double fallback_tolerance = 1e-6;
};

// Maximises phi over (tau_min, 1]. Throws InfeasibleError when no power split
// reaches R_s at the destination (tau_min >= 1).
OpaResult optimize_tau_sop(const SecrecyTarget& target, const EffectiveCoeffs& c, const UvPolicy& policy,
                           const OpaOptions& options = {});

} // namespace mmwsec

#endif
