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
#include "mmwsec/validation.hpp"

#include "mmwsec/channel.hpp"
#include "mmwsec/error.hpp"
#include "mmwsec/montecarlo.hpp"
#include "mmwsec/opa_sop.hpp"
#include "mmwsec/rng.hpp"
#include "mmwsec/sndr.hpp"
#include "mmwsec/sop.hpp"
#include "mmwsec/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmwsec
{

namespace
{

struct Setting
{
    SystemConfig cfg;
    ChannelDraw draw;
    EffectiveCoeffs coeffs;
    SecrecyTarget target;
    double tau = 1.0;
};

// Random configuration and destination draw whose SOP at the chosen tau is
// strictly between 0 and 1, so the comparison is not decided by a branch alone.
Setting conditional_setting(RngStream& rng)
{
    for (int attempt = 0; attempt < 100000; ++attempt)
    {
        Setting s;
        s.cfg.M = 100;
        s.cfg.N_D = 8 + static_cast<int>(rng.uniform() * 13);
        s.cfg.N_C = 1 + static_cast<int>(rng.uniform() * (s.cfg.N_D - 1));
        s.cfg.N_E = s.cfg.N_C + 1 + static_cast<int>(rng.uniform() * 8);
        s.cfg.P_dBm = 40.0 + 30.0 * rng.uniform();
        s.cfg.k_tx = s.cfg.k_rx = 0.15 * rng.uniform();
        s.cfg.R_s = 1.0 + 4.0 * rng.uniform();
        s.draw = sample_channel(s.cfg.N_C, s.cfg.n_dc(), s.cfg.n_ec(), rng);
        s.coeffs = derive_coeffs(s.cfg, s.draw);
        s.target = SecrecyTarget::from_rate(s.cfg.R_s);
        double lo = 0.0;
        try
        {
            lo = tau_min(s.target, s.coeffs);
        }
        catch (const InfeasibleError&)
        {
            continue;
        }
        if (lo >= 1.0)
            continue;
        s.tau = lo + (1.0 - lo) * rng.uniform();
        const SopBreakdown b = sop_overall(s.tau, s.target, s.coeffs, s.cfg.n_ec());
        if (b.branch == SopBranch::Conditional && b.value > 0.01 && b.value < 0.99)
            return s;
    }
    throw ConvergenceError("validation: could not generate a conditional SOP setting");
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

CheckResult check_conditional_sop(const ValidationOptions& o)
{
    RngStream rng(o.seed, 101);
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 5; ++i)
    {
        const Setting s = conditional_setting(rng);
        const double a = sop_conditional(s.tau, s.target, s.coeffs, s.cfg.n_ec());
        const McEstimate e = empirical_conditional_sop(s.tau, s.target, s.coeffs, s.cfg.n_ec(), o.mc_trials, o.seed + i);
        const double gap = std::abs(a - e.value);
        ok = ok && gap <= std::max(0.005, 3.0 * e.std_error);
        worst = std::max(worst, gap);
    }
    return {"conditional SOP vs Monte-Carlo", ok, "max gap " + fmt(worst)};
}

CheckResult check_cdf(const ValidationOptions& o)
{
    RngStream rng(o.seed, 102);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
    {
        const Setting s = conditional_setting(rng);
        const double x_max = s.coeffs.c > 0.0 ? std::min(s.coeffs.a / s.coeffs.c, 10.0 * s.tau * s.coeffs.a)
                                              : 10.0 * s.tau * s.coeffs.a;
        std::vector<double> grid;
        for (int j = 1; j <= 20; ++j)
            grid.push_back(x_max * j / 20.0);
        const auto emp = empirical_cdf_Y_E(s.tau, s.coeffs, s.cfg.n_ec(), grid, o.mc_trials, o.seed + 50 + i);
        for (std::size_t j = 0; j < grid.size(); ++j)
            worst = std::max(worst, std::abs(emp[j].value - cdf_Y_E(grid[j], s.tau, s.coeffs, s.cfg.n_ec())));
    }
    return {"eavesdropper SNDR CDF vs Monte-Carlo", worst <= 0.005, "max gap " + fmt(worst)};
}

CheckResult check_opa_sop(const ValidationOptions& o)
{
    RngStream rng(o.seed, 103);
    double worst = 0.0;
    int done = 0;
    while (done < o.draws)
    {
        Setting s = conditional_setting(rng);
        const double u = std::norm(rng.complex_normal());
        double v = 0.0;
        for (int j = 0; j < s.cfg.n_ec(); ++j)
            v += std::norm(rng.complex_normal());
        const OpaResult r = optimize_tau_sop(s.target, s.coeffs, UvPolicy::oracle(u, v));
        double best = 0.0;
        for (int j = 0; j < o.grid_points; ++j)
        {
            const double tau = r.tau_min + (1.0 - r.tau_min) * j / (o.grid_points - 1);
            if (tau > 0.0)
                best = std::max(best, phi(tau, u, v, s.coeffs));
        }
        worst = std::max(worst, (best - phi(r.tau_star, u, v, s.coeffs)) / best);
        ++done;
    }
    return {"power split for SOP vs grid search", worst <= 1e-7, "max relative shortfall " + fmt(worst)};
}

CheckResult check_throughput_opt(const ValidationOptions& o)
{
    RngStream rng(o.seed, 104);
    SystemConfig cfg;
    cfg.N_C = 10;
    double worst = 0.0;
    for (int i = 0; i < o.draws; ++i)
    {
        cfg.P_dBm = 20.0 + 40.0 * rng.uniform();
        cfg.k_tx = cfg.k_rx = 0.1 * rng.uniform();
        const ChannelDraw d = sample_channel(cfg.N_C, cfg.n_dc(), cfg.n_ec(), rng);
        const EffectiveCoeffs c = derive_coeffs(cfg, d);
        const KTauSolver s = KTauSolver::from(c, cfg.epsilon, cfg.n_ec());
        const ThroughputResult r = optimize_tau_throughput(c, s);
        double best = 0.0;
        for (int j = 1; j <= o.grid_points; ++j)
            best = std::max(best, rs_at(static_cast<double>(j) / o.grid_points, c, s));
        worst = std::max(worst, best - r.R_s_star);
    }
    return {"throughput power split vs grid search", worst <= 1e-6, "max shortfall [bits] " + fmt(worst)};
}

CheckResult check_mrt_closed_form()
{
    SystemConfig cfg;
    cfg.N_C = 16;
    double worst = 0.0;
    for (double P : {30.0, 50.0})
        for (double k : {0.0, 0.1})
        {
            cfg.P_dBm = P;
            cfg.k_tx = cfg.k_rx = k;
            const double a = mrt_throughput(cfg);
            const double b = mrt_throughput_direct(cfg);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
    return {"MRT throughput closed form vs 2-D quadrature", worst <= 1e-3, "max relative gap " + fmt(worst)};
}

CheckResult check_ceiling()
{
    SystemConfig cfg;
    cfg.k_tx = cfg.k_rx = 0.1;
    cfg.R_s = 6.0;
    const SecrecyTarget t = SecrecyTarget::from_rate(cfg.R_s);
    bool ok = true;
    for (double P : {20.0, 60.0, 100.0})
    {
        cfg.P_dBm = P;
        const EffectiveCoeffs c = derive_coeffs(cfg, 1.0, 10.0);
        ok = ok && sop_overall(1.0, t, c, cfg.n_ec()).branch == SopBranch::AlwaysOutage;
    }
    return {"impairment ceiling at R_s = 6", ok, ok ? "always in outage" : "branch mismatch"};
}

CheckResult check_distortion(const ValidationOptions& o)
{
    SystemConfig cfg;
    cfg.P_dBm = 50.0;
    cfg.k_tx = cfg.k_rx = 0.1;
    const DistortionSndr r = empirical_sndr_from_distortion(cfg, 0.5, o.mc_trials / 10, o.seed);
    const double zD = std::abs(r.y_D_hat - r.y_D_model) / r.y_D_se;
    const double zE = std::abs(r.y_E_hat - r.y_E_model) / r.y_E_se;
    return {"SNDR from synthesised distortion", zD <= 3.0 && zE <= 3.0,
            "z_D " + fmt(zD) + ", z_E " + fmt(zE)};
}

} // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options)
{
    std::vector<CheckResult> out;
    out.push_back(check_conditional_sop(options));
    out.push_back(check_cdf(options));
    out.push_back(check_opa_sop(options));
    out.push_back(check_throughput_opt(options));
    out.push_back(check_mrt_closed_form());
    out.push_back(check_ceiling());
    out.push_back(check_distortion(options));
    return out;
}

} // namespace mmwsec
