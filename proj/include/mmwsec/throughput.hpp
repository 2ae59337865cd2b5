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
#ifndef MMWSEC_THROUGHPUT_HPP
#define MMWSEC_THROUGHPUT_HPP

#include "mmwsec/config.hpp"

#include <cstdint>
#include <string_view>
#include <utility>

namespace mmwsec
{

// Inputs of the implicit equation Q(k) = 0 that pins the largest eavesdropper
// SNDR level k(tau) compatible with an outage cap epsilon:
//   Q(k) = exp(-k / (a - c tau k)) [1 + (1 - tau) b k / (a - c tau k)]^{-N_{E-C}} - epsilon.
struct KTauSolver
{
    double epsilon = 0.01;
    int n_ec = 1;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double tol_k = 0.0; // 0 selects 1e-10 max(1, k_hi)
    int max_iters = 200;

    static KTauSolver from(const EffectiveCoeffs& coeffs, double epsilon, int n_ec);
    void validate() const;
};

// Throws DomainError when a - c tau k <= 0.
double q_of_k(double k, double tau, double a, double b, double c, int n_ec, double epsilon);
double q_of_k(double k, double tau, const KTauSolver& s);

// k at tau = 1, where the AN term drops out: -a ln(eps) / (1 - c ln(eps)).
double k_max_tau1(double a, double c, double epsilon);

// Root of Q on its bracket by bisection. Throws ConvergenceError when the
// iteration budget runs out before the bracket shrinks to tol_k.
double solve_k(double tau, const KTauSolver& s);

// dk/dtau from implicit differentiation of Q(k(tau), tau) = 0.
double dk_dtau(double tau, double k, const KTauSolver& s);

// log2((tau (d + e) + 1) / (tau^2 e k + tau (k + e) + 1)) = log2((1 + Y_D) / (1 + tau k)).
double rs_of_tau(double tau, double k, const EffectiveCoeffs& coeffs);
double drs_dtau(double tau, double k, double dk, const EffectiveCoeffs& coeffs);

// Secrecy rate with k solved internally.
double rs_at(double tau, const EffectiveCoeffs& coeffs, const KTauSolver& s);

// dR_s/dtau at tau = 1; positive means full-power MRT is locally optimal.
double z_at_unity(const EffectiveCoeffs& coeffs, const KTauSolver& s);

enum class ThroughputCase
{
    Concave_Boundary,
    Concave_Interior,
    NonConcave_Tau1_vs_1,
    NonConcave_Tau1p_vs_Tau3,
    Silent
};

std::string_view to_string(ThroughputCase c);

struct ThroughputResult
{
    double tau_star = 0.0;
    double R_s_star = 0.0;
    ThroughputCase case_tag = ThroughputCase::Silent;
    bool transmit = false;
    double z_at_one = 0.0;
    int stationary_maxima = 0; // interior local maxima found
};

struct ThroughputOptions
{
    int scan_points = 128;     // derivative sign scan on (0, 1]
    int concavity_points = 64; // second-difference samples for the case tag
    double concavity_slack = 1e-8;
    double tau_tol = 1e-13;
};

// Maximises R_s(tau) over (0, 1]. The derivative is scanned on a mixed
// log/linear grid, every + to - sign change is refined by bisection, and the
// best of those, tau = 1 and the scan points is returned. Silent when no tau
// gives a positive rate.
ThroughputResult optimize_tau_throughput(const EffectiveCoeffs& coeffs, const KTauSolver& s,
                                         const ThroughputOptions& options = {});

// Full-power secrecy rate from (G_hat, G_check) and the bar coefficients:
// log2[(Gc + Gh (1 - c_bar ln eps)) ((e_bar + d_bar) G + 1)
//      / ((e_bar G + 1) (Gc + Gh (1 - (c_bar + a_bar) ln eps)))].
double mrt_rate(double G_hat, double G_check, const EffectiveCoeffs& bar, double epsilon);
// The same rate from the per-draw coefficients: log2((1 + d / (e + 1)) / (1 + k_max)).
double mrt_rate_direct(const EffectiveCoeffs& coeffs, double epsilon);

// Smallest G_check for which full-power transmission has a non-negative secrecy
// rate at the given G_hat. May be negative (every G_check transmits).
double mrt_transmit_threshold(double G_hat, const EffectiveCoeffs& bar, double epsilon);

struct QuadratureSpec
{
    double tail_mass = 1e-12; // Gamma tail beyond the truncation point
    double rel_tol = 1e-10;
    unsigned max_depth = 15;
};

// Expected MRT secrecy rate over (G_hat, G_check) restricted to the transmission
// region: outer adaptive quadrature over G_hat of the exponential-integral
// closed form for the G_check integral.
double mrt_throughput(const SystemConfig& cfg, const QuadratureSpec& spec = {});
// Reference: nested adaptive quadrature over both gains.
double mrt_throughput_direct(const SystemConfig& cfg, const QuadratureSpec& spec = {});

// Inner G_check integral for one G_hat value (closed form), in bits.
double mrt_inner_closed_form(double G_hat, int n_dc, const EffectiveCoeffs& bar, double epsilon);

enum class PowerScheme
{
    Opa,
    EqualPower,
    Mrt
};

std::string_view to_string(PowerScheme s);

struct ThroughputAverage
{
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n = 0;
    double tau_star_mean = 0.0; // over transmitting draws
    double tau_star_se = 0.0;
    double transmit_fraction = 0.0;
};

// Monte-Carlo average of the per-draw secrecy rate (zero outside the
// transmission region). Draw i always comes from the same substream of seed,
// so the three schemes see common channel realisations.
ThroughputAverage avg_throughput(const SystemConfig& cfg, PowerScheme scheme, std::int64_t trials,
                                 std::uint64_t seed, unsigned threads = 0);

// Reference values on the same draws: the OPA rate by grid search over
// grid_points values of tau and every k(tau) from an independent bracketing
// solver; equal power and MRT through the same independent evaluations.
ThroughputAverage avg_throughput_reference(const SystemConfig& cfg, PowerScheme scheme, std::int64_t trials,
                                           std::uint64_t seed, int grid_points = 2048, unsigned threads = 0);

// High-SNR limits: k_inf = R a / ((1 - tau) b + R c tau) with R = eps^{-1/N_{E-C}} - 1,
// rs_inf = log2((1 + 1/k_tot^2) / (1 + tau k_inf)).
std::pair<double, double> high_snr_k_and_rate(double tau, const EffectiveCoeffs& coeffs, double epsilon, int n_ec);

} // namespace mmwsec

#endif
