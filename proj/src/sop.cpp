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
#include "mmwsec/sop.hpp"

#include "mmwsec/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace mmwsec
{

namespace
{

// P(Y_E > x) over u ~ Exp(1), v ~ Gamma(n_ec, 1); x > 0.
double eve_exceedance(double x, double tau, const EffectiveCoeffs& c, int n_ec)
{
    if (x <= 0.0)
        return 1.0;
    if (c.a <= 0.0 || tau <= 0.0)
        return 0.0;
    const double margin = c.a - c.c * x; // Y_E < a/c = 1/k_tx^2 surely
    if (margin <= 0.0)
        return 0.0;
    const double scale = tau * margin;
    const double exponent = x / scale;
    const double an_term = (1.0 - tau) * c.b * x / scale;
    return std::exp(-(exponent + n_ec * std::log1p(an_term)));
}

bool at_or_above(double T, double gamma) { return T >= gamma * (1.0 - kBranchRelTol); }

} // namespace

SecrecyTarget SecrecyTarget::from_rate(double R_s)
{
    if (!(R_s >= 0.0))
        throw DomainError("SecrecyTarget: R_s must be non-negative");
    SecrecyTarget t;
    t.R_s = R_s;
    t.T = std::exp2(R_s);
    t.T_bar = std::expm1(R_s * std::numbers::ln2);
    return t;
}

double tau_min(const SecrecyTarget& target, const EffectiveCoeffs& c)
{
    if (target.T_bar == 0.0)
        return 0.0;
    const double denom = c.d - c.e * target.T_bar;
    if (!(denom > 0.0))
        throw InfeasibleError("tau_min: d <= e T_bar, the destination cannot reach R_s at any power split");
    return target.T_bar / denom;
}

double cdf_lambda_hat(const std::function<double(double)>& F_lambda, double alpha1, double alpha2, double alpha3,
                      double x)
{
    if (!(alpha1 > 0.0 && alpha2 > 0.0 && alpha3 > 0.0))
        throw DomainError("cdf_lambda_hat: alpha coefficients must be positive");
    if (x >= alpha1 / alpha2)
        return 1.0;
    if (x <= 0.0)
        return F_lambda(0.0);
    return F_lambda(alpha3 * x / (alpha1 - alpha2 * x));
}

double cdf_Y_E(double x, double tau, const EffectiveCoeffs& c, int n_ec)
{
    if (x <= 0.0)
        return 0.0;
    if (c.a <= 0.0 || tau <= 0.0)
        return 1.0;
    const double margin = c.a - c.c * x;
    if (margin <= 0.0)
        return 1.0;
    const double scale = tau * margin;
    const double exponent = x / scale + n_ec * std::log1p((1.0 - tau) * c.b * x / scale);
    return -std::expm1(-exponent);
}

double eve_sndr_threshold(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c)
{
    const double load = tau * c.e + 1.0;
    return (tau * c.d - target.T_bar * load) / (target.T * load);
}

double sop_conditional(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec)
{
    return eve_exceedance(eve_sndr_threshold(tau, target, c), tau, c, n_ec);
}

double sop_conditional_expanded(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec)
{
    const double T = target.T;
    const double Tb = target.T_bar;
    const double excess = tau * c.d - (tau * c.e + 1.0) * Tb;
    const double denom = tau * ((tau * c.e + 1.0) * T * c.a - c.c * excess);
    return std::exp(-excess / denom) * std::pow(1.0 + (1.0 - tau) * c.b * excess / denom, -n_ec);
}

Thresholds thresholds(double tau, const EffectiveCoeffs& c)
{
    const double kt2 = c.k_tx2;
    const double kk = c.k_tot2;
    const double k1 = kt2 + kt2 * kk;
    const double k2 = kk + kt2 * kk;
    const double k3 = kk + 1.0;
    const double td = tau * c.d;
    Thresholds t;
    t.gamma1 = (td * k1 + kt2) / (td * k2 + kt2 + 1.0);
    t.gamma2 = (td * k3 + 1.0) / (td * kk + 1.0);
    t.gamma3 = kk > 0.0 ? k3 / kk : std::numeric_limits<double>::infinity();
    return t;
}

std::string_view to_string(SopBranch b)
{
    switch (b)
    {
    case SopBranch::AlwaysOutage:
        return "AlwaysOutage";
    case SopBranch::Conditional:
        return "Conditional";
    case SopBranch::Zero:
        return "Zero";
    case SopBranch::SourceSilent:
        return "SourceSilent";
    }
    return "?";
}

bool in_transmission_region(const SecrecyTarget& target, const EffectiveCoeffs& c)
{
    const Thresholds full = thresholds(1.0, c);
    return !at_or_above(target.T, full.gamma3) && !at_or_above(target.T, full.gamma2);
}

SopBreakdown sop_overall(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec)
{
    if (!(tau >= 0.0 && tau <= 1.0))
        throw DomainError("sop_overall: tau must lie in [0, 1]");
    const Thresholds at_tau = thresholds(tau, c);
    const Thresholds full = thresholds(1.0, c);

    SopBreakdown out;
    out.gamma1 = at_tau.gamma1;
    out.gamma2 = at_tau.gamma2;
    out.gamma3 = at_tau.gamma3;
    const double denom = c.d - c.e * target.T_bar;
    out.tau_min = denom > 0.0 ? target.T_bar / denom : std::numeric_limits<double>::quiet_NaN();

    const double T = target.T;
    if (at_or_above(T, at_tau.gamma3))
    {
        out.branch = SopBranch::AlwaysOutage;
        out.value = 1.0;
    }
    else if (at_or_above(T, full.gamma2))
    {
        out.branch = SopBranch::SourceSilent;
        out.value = 0.0;
    }
    else if (at_or_above(T, at_tau.gamma2))
    {
        // transmitting below tau_min: the destination itself cannot decode
        out.branch = SopBranch::AlwaysOutage;
        out.value = 1.0;
    }
    else if (T < at_tau.gamma1 * (1.0 - kBranchRelTol))
    {
        out.branch = SopBranch::Zero;
        out.value = 0.0;
    }
    else
    {
        out.branch = SopBranch::Conditional;
        out.value = sop_conditional(tau, target, c, n_ec);
    }
    return out;
}

} // namespace mmwsec
