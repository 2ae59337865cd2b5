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
#ifndef MMWSEC_MONTECARLO_HPP
#define MMWSEC_MONTECARLO_HPP

#include "mmwsec/channel.hpp"
#include "mmwsec/config.hpp"
#include "mmwsec/sop.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace mmwsec
{

struct McEstimate
{
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
};

// How the information share is chosen per destination draw.
struct TauRule
{
    enum class Kind
    {
        Fixed,     // the given tau for every draw
        OptimalSop // mean-substitution maximiser of (1 + Y_D) / (1 + Y_E)
    };
    Kind kind = Kind::Fixed;
    double tau = 1.0;

    static TauRule fixed(double tau) { return {Kind::Fixed, tau}; }
    static TauRule optimal() { return {Kind::OptimalSop, 1.0}; }
};

// tau actually used for a draw; OptimalSop falls back to 1 when no split lets
// the destination decode (the draw is then in outage at every tau).
double resolve_tau(const TauRule& rule, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec);

enum class McStatus
{
    Ok,
    LowAcceptance, // acceptance rate below 1e-4
    EmptyRegion    // no draw accepted within the attempt budget
};

std::string_view to_string(McStatus s);

struct SopEstimate
{
    McEstimate sop;
    double accept_rate = 0.0;
    double tau_mean = 0.0; // mean information share over accepted draws
    McStatus status = McStatus::Ok;
};

// Outage frequency over (u, v) for one destination draw: u = |CN(0,1)|^2,
// v = sum of N_{E-C} such terms, outage when log2((1 + Y_D) / (1 + Y_E)) < R_s.
McEstimate empirical_conditional_sop(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c, int n_ec,
                                     std::int64_t n, std::uint64_t seed, unsigned threads = 0);

// Pointwise empirical CDF of Y_E over (u, v) for one destination draw.
std::vector<McEstimate> empirical_cdf_Y_E(double tau, const EffectiveCoeffs& c, int n_ec,
                                          std::span<const double> x_grid, std::int64_t n, std::uint64_t seed,
                                          unsigned threads = 0);

// Draws whose outage is averaged: the source transmits when full power clears
// R_s at the destination; above the hardware ceiling every draw counts (and is
// in outage).
bool counts_toward_sop(const SecrecyTarget& target, const EffectiveCoeffs& c);

// Full stochastic SOP: rejection-samples (G_hat, G_check, u, v) into the
// transmission region and counts secrecy-rate shortfalls. n accepted draws.
SopEstimate empirical_sop(const SystemConfig& cfg, const TauRule& rule, std::int64_t n, std::uint64_t seed,
                          unsigned threads = 0);

// Per-draw statistic averaged by region_average.
using DrawScore = std::function<double(double tau, const SecrecyTarget& target, const EffectiveCoeffs& c,
                                       const ChannelDraw& draw, int n_ec)>;

// Mean of score over n destination draws accepted into the SOP averaging set.
// Draw sequences depend only on (cfg path counts, seed), so estimators that
// share a seed see the same draws.
SopEstimate region_average(const SystemConfig& cfg, const TauRule& rule, std::int64_t n, std::uint64_t seed,
                           unsigned threads, const DrawScore& score);

// Closed-form counterpart: the average of the piecewise conditional SOP over the
// same accepted destination draws (same seed gives the same draws).
SopEstimate analytic_sop(const SystemConfig& cfg, const TauRule& rule, std::int64_t n, std::uint64_t seed,
                         unsigned threads = 0);

struct DistortionSndr
{
    double y_D_hat = 0.0;
    double y_D_se = 0.0;
    double y_E_hat = 0.0;
    double y_E_se = 0.0;
    double y_D_model = 0.0; // closed-form SNDRs for the same channel
    double y_E_model = 0.0;
    double an_leakage = 0.0; // ||h_D F|| / ||h_D||
    std::int64_t n = 0;
};

// Synthesises transmit signal, artificial noise, transmit distortion with
// covariance k_tx^2 E{x x^H}, receive distortion with variance k_rx^2 E{|h_D x|^2}
// and thermal noise on a sampled array channel, and estimates both SNDRs as
// signal power over the sample mean of everything else.
DistortionSndr empirical_sndr_from_distortion(const SystemConfig& cfg, double tau, std::int64_t n, std::uint64_t seed);

} // namespace mmwsec

#endif
