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
#include "mmwsec/montecarlo.hpp"

#include "mmwsec/channel.hpp"
#include "mmwsec/error.hpp"
#include "mmwsec/opa_sop.hpp"
#include "mmwsec/parallel.hpp"
#include "mmwsec/rng.hpp"
#include "mmwsec/sndr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mmwsec
{

namespace
{

constexpr std::int64_t kBlockSize = 4096;
constexpr std::uint64_t kConditionalStream = 0x636f6e64ULL;
constexpr std::uint64_t kCdfStream = 0x636466ULL;
constexpr std::uint64_t kSopStream = 0x736f70ULL;
constexpr std::uint64_t kDistortionStream = 0x64697374ULL;
constexpr double kLowAcceptance = 1e-4;
// Attempts allowed per accepted draw before a block gives up.
constexpr std::int64_t kAttemptsPerAccept = 100000;
// A block whose acceptance is still below kLowAcceptance after this many attempts stops early.
constexpr std::int64_t kPilotAttempts = 1000000;

std::int64_t block_count(std::int64_t n)
{
    return (n + kBlockSize - 1) / kBlockSize;
}

std::int64_t block_length(std::int64_t blk, std::int64_t n)
{
    return std::min(kBlockSize, n - blk * kBlockSize);
}

double draw_v(RngStream& rng, int n_ec)
{
    double v = 0.0;
    for (int i = 0; i < n_ec; ++i)
        v += std::norm(rng.complex_normal());
    return v;
}

McEstimate binomial(std::int64_t hits, std::int64_t n, std::uint64_t seed)
{
    McEstimate e;
    e.n = n;
    e.seed = seed;
    if (n == 0)
    {
        e.value = std::numeric_limits<double>::quiet_NaN();
        return e;
    }
    e.value = static_cast<double>(hits) / static_cast<double>(n);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
    return e;
}

void check_trials(std::int64_t n, const char* what)
{
    if (n < 1)
        throw DomainError(std::string(what) + ": n must be at least 1");
}

struct SopPartial
{
    double sum = 0.0;
    double sum2 = 0.0;
    double tau = 0.0;
    std::int64_t accepted = 0;
    std::int64_t attempts = 0;
};

// Shared rejection loop: the channel stream is identical for the analytic and
// the stochastic estimator, so both average over the same destination draws.
} // namespace

SopEstimate region_average(const SystemConfig& cfg, const TauRule& rule, std::int64_t n, std::uint64_t seed,
                           unsigned threads, const DrawScore& score)
{
    check_trials(n, "sop estimate");
    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    const SecrecyTarget target = SecrecyTarget::from_rate(cfg.R_s);
    const int n_c = cfg.N_C;
    const int n_dc = cfg.n_dc();
    const int n_ec = cfg.n_ec();
    const RngStream root(seed, kSopStream);

    const std::int64_t blocks = block_count(n);
    std::vector<SopPartial> parts(static_cast<std::size_t>(blocks));
    parallel_for(
        static_cast<std::size_t>(blocks),
        [&](std::size_t blk) {
            RngStream rng = root.substream(blk);
            const std::int64_t want = block_length(static_cast<std::int64_t>(blk), n);
            const std::int64_t budget = want * kAttemptsPerAccept;
            SopPartial p;
            while (p.accepted < want && p.attempts < budget)
            {
                const ChannelDraw d = sample_channel(n_c, n_dc, n_ec, rng);
                ++p.attempts;
                const EffectiveCoeffs c = scale_coeffs(bar, d.G_hat, d.G_check);
                if (!counts_toward_sop(target, c))
                {
                    if (p.attempts >= kPilotAttempts &&
                        static_cast<double>(p.accepted) < kLowAcceptance * static_cast<double>(p.attempts))
                        break;
                    continue;
                }
                const double tau = resolve_tau(rule, target, c, n_ec);
                const double s = score(tau, target, c, d, n_ec);
                p.sum += s;
                p.sum2 += s * s;
                p.tau += tau;
                ++p.accepted;
            }
            parts[blk] = p;
        },
        threads);

    SopPartial tot;
    for (const auto& p : parts)
    {
        tot.sum += p.sum;
        tot.sum2 += p.sum2;
        tot.tau += p.tau;
        tot.accepted += p.accepted;
        tot.attempts += p.attempts;
    }
    SopEstimate out;
    out.sop.seed = seed;
    out.sop.n = tot.accepted;
    out.accept_rate = tot.attempts > 0 ? static_cast<double>(tot.accepted) / static_cast<double>(tot.attempts) : 0.0;
    if (tot.accepted == 0)
    {
        out.status = McStatus::EmptyRegion;
        out.sop.value = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    const double m = static_cast<double>(tot.accepted);
    out.sop.value = tot.sum / m;
    const double var = tot.accepted > 1 ? std::max(0.0, (tot.sum2 - m * out.sop.value * out.sop.value) / (m - 1.0)) : 0.0;
    out.sop.std_error = std::sqrt(var / m);
    out.tau_mean = tot.tau / m;
    out.status = out.accept_rate < kLowAcceptance ? McStatus::LowAcceptance : McStatus::Ok;
    return out;
}

double resolve_tau(const TauRule& rule, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec)
{
    if (rule.kind == TauRule::Kind::Fixed)
    {
        if (!(rule.tau >= 0.0 && rule.tau <= 1.0))
            throw DomainError("resolve_tau: tau must lie in [0, 1]");
        return rule.tau;
    }
    try
    {
        return optimize_tau_sop(target, c, UvPolicy::mean(n_ec)).tau_star;
    }
    catch (const InfeasibleError&)
    {
        return 1.0;
    }
}

std::string_view to_string(McStatus s)
{
    switch (s)
    {
    case McStatus::Ok:
        return "ok";
    case McStatus::LowAcceptance:
        return "low_acceptance";
    case McStatus::EmptyRegion:
        return "empty_region";
    }
    return "?";
}

McEstimate empirical_conditional_sop(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec,
                                     std::int64_t n, std::uint64_t seed, unsigned threads)
{
    check_trials(n, "empirical_conditional_sop");
    if (!(tau >= 0.0 && tau <= 1.0))
        throw DomainError("empirical_conditional_sop: tau must lie in [0, 1]");
    const RngStream root(seed, kConditionalStream);
    const double y_D = sndr_destination(tau, c);
    const std::int64_t blocks = block_count(n);
    std::vector<std::int64_t> hits(static_cast<std::size_t>(blocks), 0);
    parallel_for(
        static_cast<std::size_t>(blocks),
        [&](std::size_t blk) {
            RngStream rng = root.substream(blk);
            const std::int64_t len = block_length(static_cast<std::int64_t>(blk), n);
            std::int64_t h = 0;
            for (std::int64_t i = 0; i < len; ++i)
            {
                const double u = std::norm(rng.complex_normal());
                const double v = draw_v(rng, n_ec);
                const double y_E = sndr_eve(tau, u, v, c);
                if (1.0 + y_D < target.T * (1.0 + y_E))
                    ++h;
            }
            hits[blk] = h;
        },
        threads);
    std::int64_t total = 0;
    for (auto h : hits)
        total += h;
    return binomial(total, n, seed);
}

std::vector<McEstimate> empirical_cdf_Y_E(double tau, const EffectiveCoeffs& c, int n_ec, std::span<const double> x_grid,
                                          std::int64_t n, std::uint64_t seed, unsigned threads)
{
    check_trials(n, "empirical_cdf_Y_E");
    if (!std::is_sorted(x_grid.begin(), x_grid.end()))
        throw DomainError("empirical_cdf_Y_E: grid must be sorted");
    const RngStream root(seed, kCdfStream);
    const std::size_t g = x_grid.size();
    const std::int64_t blocks = block_count(n);
    std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(blocks));
    parallel_for(
        static_cast<std::size_t>(blocks),
        [&](std::size_t blk) {
            RngStream rng = root.substream(blk);
            const std::int64_t len = block_length(static_cast<std::int64_t>(blk), n);
            std::vector<std::int64_t> below(g, 0);
            for (std::int64_t i = 0; i < len; ++i)
            {
                const double u = std::norm(rng.complex_normal());
                const double v = draw_v(rng, n_ec);
                const double y = sndr_eve(tau, u, v, c);
                // first grid point with y <= x
                const auto it = std::lower_bound(x_grid.begin(), x_grid.end(), y);
                for (auto j = static_cast<std::size_t>(it - x_grid.begin()); j < g; ++j)
                    ++below[j];
            }
            counts[blk] = std::move(below);
        },
        threads);
    std::vector<McEstimate> out;
    out.reserve(g);
    for (std::size_t j = 0; j < g; ++j)
    {
        std::int64_t total = 0;
        for (const auto& cnt : counts)
            total += cnt[j];
        out.push_back(binomial(total, n, seed));
    }
    return out;
}

bool counts_toward_sop(const SecrecyTarget& target, const EffectiveCoeffs& c)
{
    if (target.T_bar >= high_snr_ceiling(c.k_tot2))
        return true;
    return sndr_destination(1.0, c) > target.T_bar;
}

SopEstimate empirical_sop(const SystemConfig& cfg, const TauRule& rule, std::int64_t n, std::uint64_t seed,
                          unsigned threads)
{
    return region_average(cfg, rule, n, seed, threads,
                             [&](double tau, const SecrecyTarget& target, const EffectiveCoeffs& c,
                                 const ChannelDraw& d, int) {
                                 const SndrPair y = sndr_pair(tau, d.u, d.v, c);
                                 return (1.0 + y.y_D < target.T * (1.0 + y.y_E)) ? 1.0 : 0.0;
                             });
}

SopEstimate analytic_sop(const SystemConfig& cfg, const TauRule& rule, std::int64_t n, std::uint64_t seed,
                         unsigned threads)
{
    return region_average(cfg, rule, n, seed, threads,
                             [](double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, const ChannelDraw&,
                                int n_ec) { return sop_overall(tau, target, c, n_ec).value; });
}

DistortionSndr empirical_sndr_from_distortion(const SystemConfig& cfg, double tau, std::int64_t n, std::uint64_t seed)
{
    check_trials(n, "empirical_sndr_from_distortion");
    if (!(tau > 0.0 && tau <= 1.0))
        throw DomainError("empirical_sndr_from_distortion: tau must lie in (0, 1]");
    cfg.validate();
    const int n_ec = cfg.n_ec();
    if (n_ec < 1)
        throw InfeasibleError("empirical_sndr_from_distortion: needs N_E > N_C");

    RngStream rng(seed, kDistortionStream);
    const AngularBasis basis = build_basis(cfg.M);
    const PathSets sets = sample_path_sets(cfg.M, cfg.N_D, cfg.N_E, cfg.N_C, rng);
    const ChannelDraw draw = sample_channel(sets, rng, true);
    const double alpha_D = path_loss_linear(cfg.d_D_m, cfg.pl_a, cfg.pl_b);
    const double alpha_E = path_loss_linear(cfg.d_E_m, cfg.pl_a, cfg.pl_b);
    const CRowVector h_D =
        channel_vector(basis, sets.xi_D, destination_gains(sets, *draw.gains), cfg.M * alpha_D / cfg.N_D);
    const CRowVector h_E =
        channel_vector(basis, sets.xi_E, eavesdropper_gains(sets, *draw.gains), cfg.M * alpha_E / cfg.N_E);
    const AnBeamformer bf = an_beamformer(basis, sets, h_D);

    const double P = dbm_to_watt(cfg.P_dBm);
    const double noise = dbm_to_watt(cfg.sigma_n2_dBm);
    const double kt = cfg.k_tx;
    const double amp_s = std::sqrt(tau * P);
    const double amp_w = std::sqrt((1.0 - tau) * P / n_ec);

    const std::complex<double> hD_f1 = (h_D * bf.f1)(0);
    const std::complex<double> hE_f1 = (h_E * bf.f1)(0);
    const CRowVector hD_F = h_D * bf.F;
    const CRowVector hE_F = h_E * bf.F;
    // E{|h_D x|^2} from the transmit covariance, leakage included
    const double rx_power = tau * P * std::norm(hD_f1) + (1.0 - tau) * P / n_ec * hD_F.squaredNorm();
    const double rx_sd = cfg.k_rx * std::sqrt(rx_power);
    const double noise_sd = std::sqrt(noise);

    double sum_D = 0.0, sum2_D = 0.0, sum_E = 0.0, sum2_E = 0.0;
    Eigen::VectorXcd w(n_ec), w_d(n_ec);
    for (std::int64_t i = 0; i < n; ++i)
    {
        for (int j = 0; j < n_ec; ++j)
            w(j) = rng.complex_normal();
        // transmit distortion: independent copy of the transmit structure scaled by k_tx
        const std::complex<double> s_d = rng.complex_normal();
        for (int j = 0; j < n_ec; ++j)
            w_d(j) = rng.complex_normal();
        const std::complex<double> eta_rx = rx_sd * rng.complex_normal();
        const std::complex<double> n_D = noise_sd * rng.complex_normal();
        const std::complex<double> n_E = noise_sd * rng.complex_normal();

        const std::complex<double> an_D = amp_w * (hD_F * w)(0);
        const std::complex<double> an_E = amp_w * (hE_F * w)(0);
        const std::complex<double> dist_D = kt * (amp_s * hD_f1 * s_d + amp_w * (hD_F * w_d)(0));
        const std::complex<double> dist_E = kt * (amp_s * hE_f1 * s_d + amp_w * (hE_F * w_d)(0));

        const double iD = std::norm(an_D + dist_D + eta_rx + n_D);
        const double iE = std::norm(an_E + dist_E + n_E);
        sum_D += iD;
        sum2_D += iD * iD;
        sum_E += iE;
        sum2_E += iE * iE;
    }
    const double m = static_cast<double>(n);
    auto ratio = [m](double signal, double sum, double sum2, double& se) {
        const double mean = sum / m;
        const double var = m > 1 ? std::max(0.0, (sum2 - m * mean * mean) / (m - 1.0)) : 0.0;
        const double r = signal / mean;
        se = r * std::sqrt(var / m) / mean;
        return r;
    };

    DistortionSndr out;
    out.n = n;
    out.y_D_hat = ratio(tau * P * std::norm(hD_f1), sum_D, sum2_D, out.y_D_se);
    out.y_E_hat = ratio(tau * P * std::norm(hE_f1), sum_E, sum2_E, out.y_E_se);
    const EffectiveCoeffs c = derive_coeffs(cfg, draw);
    out.y_D_model = sndr_destination(tau, c);
    out.y_E_model = sndr_eve(tau, draw.u, draw.v, c);
    out.an_leakage = hD_F.norm() / h_D.norm();
    return out;
}

} // namespace mmwsec
