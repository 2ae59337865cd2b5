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
#include "mmwsec/opa_sop.hpp"

#include "mmwsec/error.hpp"
#include "mmwsec/sndr.hpp"

#include <algorithm>
#include <cmath>

namespace mmwsec
{

PhiCoeffs phi_coeffs(double u, double v, const EffectiveCoeffs& c)
{
    const double bv = c.b * v;
    const double cu = c.c * u;
    const double au = c.a * u;
    PhiCoeffs p;
    p.c1 = (c.e + c.d) * (cu - bv);
    p.c2 = (c.e + c.d) * (bv + 1.0) + cu - bv;
    p.c3 = bv + 1.0;
    p.c4 = c.e * (cu + au - bv);
    p.c5 = c.e * (bv + 1.0) + cu + au - bv;
    p.c6 = bv + 1.0;
    p.eps1 = p.c1 * p.c5 - p.c2 * p.c4;
    p.eps2 = 2.0 * p.c3 * (p.c1 - p.c4);
    p.eps3 = p.c3 * (p.c2 - p.c5);
    return p;
}

double phi(double tau, double u, double v, const EffectiveCoeffs& c)
{
    return (1.0 + sndr_destination(tau, c)) / (1.0 + sndr_eve(tau, u, v, c));
}

double phi_rational(double tau, const PhiCoeffs& p)
{
    return ((p.c1 * tau + p.c2) * tau + p.c3) / ((p.c4 * tau + p.c5) * tau + p.c6);
}

double omega(double tau, const PhiCoeffs& p) { return (p.eps1 * tau + p.eps2) * tau + p.eps3; }

std::vector<double> omega_roots(const PhiCoeffs& p)
{
    const double scale = std::abs(p.eps2) + std::abs(p.eps3);
    if (std::abs(p.eps1) <= 1e-12 * scale || p.eps1 == 0.0)
    {
        if (p.eps2 == 0.0)
            return {};
        return {-p.eps3 / p.eps2};
    }
    const double disc = p.eps2 * p.eps2 - 4.0 * p.eps1 * p.eps3;
    if (disc < 0.0)
        return {};
    // cancellation-free pair: q / eps1 and eps3 / q
    const double q = -0.5 * (p.eps2 + std::copysign(std::sqrt(disc), p.eps2));
    std::vector<double> roots;
    roots.push_back(q / p.eps1);
    if (q != 0.0)
        roots.push_back(p.eps3 / q);
    else
        roots.push_back(q / p.eps1);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string_view to_string(OpaCase c)
{
    switch (c)
    {
    case OpaCase::BothPositiveOrBothNegative:
        return "BothPositiveOrBothNegative";
    case OpaCase::ConvexEndpoints:
        return "ConvexEndpoints";
    case OpaCase::ConcaveInterior:
        return "ConcaveInterior";
    case OpaCase::DegenerateLinear:
        return "DegenerateLinear";
    case OpaCase::GridFallback:
        return "GridFallback";
    }
    return "?";
}

OpaResult optimize_tau_sop(const SecrecyTarget& target, const EffectiveCoeffs& c, const UvPolicy& policy,
                           const OpaOptions& options)
{
    const double lo = tau_min(target, c);
    if (!(lo < 1.0))
        throw InfeasibleError("optimize_tau_sop: tau_min >= 1, source stays silent");

    const PhiCoeffs pc = phi_coeffs(policy.u, policy.v, c);
    auto objective = [&](double tau) { return phi(tau, policy.u, policy.v, c); };

    OpaResult r;
    r.tau_min = lo;
    r.omega_at_tau_min = omega(lo, pc);
    r.omega_at_one = omega(1.0, pc);

    const auto roots = omega_roots(pc);
    std::vector<double> inside;
    for (double t : roots)
        if (t > lo && t < 1.0)
            inside.push_back(t);

    std::vector<double> candidates;
    const double wl = r.omega_at_tau_min;
    const double w1 = r.omega_at_one;
    const bool linear = roots.size() == 1;
    if (linear)
    {
        r.case_tag = OpaCase::DegenerateLinear;
        candidates = {lo, 1.0};
        candidates.insert(candidates.end(), inside.begin(), inside.end());
    }
    else if (wl < 0.0 && w1 > 0.0)
    {
        r.case_tag = OpaCase::ConvexEndpoints;
        candidates = {lo, 1.0};
    }
    else if (wl > 0.0 && w1 < 0.0)
    {
        r.case_tag = OpaCase::ConcaveInterior;
        // the crossing where Omega turns from + to -
        for (double t : inside)
        {
            const double h = 1e-9 * std::max(1.0, t);
            if (omega(std::max(lo, t - h), pc) >= 0.0 && omega(std::min(1.0, t + h), pc) <= 0.0)
                candidates.push_back(t);
        }
        if (candidates.empty())
            candidates = inside;
        if (candidates.empty())
            candidates = {lo, 1.0};
    }
    else
    {
        r.case_tag = OpaCase::BothPositiveOrBothNegative;
        candidates = {lo, 1.0};
        candidates.insert(candidates.end(), inside.begin(), inside.end());
    }

    double best_tau = candidates.front();
    double best = objective(best_tau);
    for (double t : candidates)
    {
        const double f = objective(t);
        if (f > best)
        {
            best = f;
            best_tau = t;
        }
    }

    if (options.validation_points > 1)
    {
        const int n = options.validation_points;
        double grid_best = -1.0;
        double grid_tau = 1.0;
        for (int i = 0; i < n; ++i)
        {
            const double t = lo + (1.0 - lo) * i / (n - 1);
            const double f = objective(t);
            if (f > grid_best)
            {
                grid_best = f;
                grid_tau = t;
            }
        }
        if (grid_best > best * (1.0 + options.fallback_tolerance))
        {
            best = grid_best;
            best_tau = grid_tau;
            r.case_tag = OpaCase::GridFallback;
        }
    }

    // tau_min itself only meets the rate with equality; step just inside the open interval
    if (best_tau <= lo)
    {
        best_tau = lo + 1e-9 * (1.0 - lo);
        best = objective(best_tau);
    }
    r.tau_star = best_tau;
    r.objective_value = best;
    return r;
}

} // namespace mmwsec
