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
#ifndef MMWSEC_SOP_HPP
#define MMWSEC_SOP_HPP

#include "mmwsec/config.hpp"

#include <functional>
#include <string_view>

namespace mmwsec
{

struct SecrecyTarget
{
    double R_s = 0.0;   // bits/s/Hz
    double T = 1.0;     // 2^R_s
    double T_bar = 0.0; // T - 1

    static SecrecyTarget from_rate(double R_s);
};

// Smallest information share that still lets the destination decode at R_s:
// T_bar / (d - e T_bar). Throws InfeasibleError when d <= e T_bar.
double tau_min(const SecrecyTarget& target, const EffectiveCoeffs& c);

// CDF of alpha1 L / (alpha2 L + alpha3) for a non-negative variable L with CDF F_L.
double cdf_lambda_hat(const std::function<double(double)>& F_lambda, double alpha1, double alpha2, double alpha3,
                      double x);

// CDF of the eavesdropper SNDR over (u, v) for a fixed destination draw.
double cdf_Y_E(double x, double tau, const EffectiveCoeffs& c, int n_ec);

// Eavesdropper SNDR above which the secrecy rate drops under R_s:
// (tau d - T_bar (tau e + 1)) / (T (tau e + 1)).
double eve_sndr_threshold(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c);

// Outage probability over (u, v) given the destination draw, written as
// 1 - F_{Y_E}(threshold). Valid for tau_min < tau <= 1.
double sop_conditional(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec);

// The same probability spelled out as exp(...) [1 + ...]^{-N_{E-C}}; kept as an
// independent transcription for cross-checking.
double sop_conditional_expanded(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec);

struct Thresholds
{
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0; // +infinity for ideal hardware
};

Thresholds thresholds(double tau, const EffectiveCoeffs& c);

enum class SopBranch
{
    AlwaysOutage, // T above the impairment ceiling, or tau below tau_min
    Conditional,
    Zero,
    SourceSilent // destination draw outside the transmission region
};

std::string_view to_string(SopBranch b);

struct SopBreakdown
{
    double value = 0.0;
    SopBranch branch = SopBranch::SourceSilent;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    double tau_min = 0.0; // NaN when no feasible tau exists
};

// Relative slack used when classifying T against the gamma thresholds; ties go
// to the outage side.
inline constexpr double kBranchRelTol = 1e-12;

// Piecewise SOP at the chosen power split. Draws with T >= gamma2(1) are
// reported as SourceSilent (value 0) and must be excluded from conditional averages.
SopBreakdown sop_overall(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec);

// True when the destination draw lies in the on-off transmission region, i.e.
// full-power MRT decodes above R_s.
bool in_transmission_region(const SecrecyTarget& target, const EffectiveCoeffs& c);

} // namespace mmwsec

#endif
