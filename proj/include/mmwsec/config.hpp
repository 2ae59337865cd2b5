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
#ifndef MMWSEC_CONFIG_HPP
#define MMWSEC_CONFIG_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace mmwsec
{

// System parameters. Powers are given in dBm at this boundary only; every
// formula downstream works on linear ratios.
struct SystemConfig
{
    int M = 100;                // transmit antennas
    int N_D = 20;               // resolvable paths, destination
    int N_E = 20;               // resolvable paths, eavesdropper
    int N_C = 10;               // paths common to both
    double P_dBm = 5.0;         // total transmit power
    double sigma_n2_dBm = -50.0; // receiver noise power
    double k_tx = 0.0;          // transmitter EVM
    double k_rx = 0.0;          // receiver EVM
    double d_D_m = 100.0;       // source -> destination distance
    double d_E_m = 100.0;       // source -> eavesdropper distance
    double pl_a = 61.4;         // path-loss intercept [dB]
    double pl_b = 2.0;          // path-loss slope
    double R_s = 5.0;           // target secrecy rate [bits/s/Hz]
    double epsilon = 0.01;      // maximum tolerable SOP (throughput mode)

    int n_dc() const { return N_D - N_C; }
    int n_ec() const { return N_E - N_C; }
    double k_tx2() const { return k_tx * k_tx; }
    double k_tot2() const { return k_tx * k_tx + k_rx * k_rx; }

    // Throws DomainError when any invariant is violated.
    void validate() const;
};

// Names of all keys accepted by set_config_value / config files, in declaration order.
const std::vector<std::string>& config_keys();
bool is_config_key(const std::string& key);

// Assigns one field from its textual value. Throws DomainError on unknown keys
// or unparsable values.
void set_config_value(SystemConfig& cfg, const std::string& key, const std::string& value);
std::string get_config_value(const SystemConfig& cfg, const std::string& key);

// Flat "key = value" text; '#' starts a comment. When N_E is absent it follows N_D.
// Keys that are not config fields are returned in `extra` (if given) instead of failing.
SystemConfig parse_config(std::istream& in, std::map<std::string, std::string>* extra = nullptr);
SystemConfig load_config(const std::string& path, std::map<std::string, std::string>* extra = nullptr);
void write_config(std::ostream& out, const SystemConfig& cfg);

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

// alpha_dB = pl_a + pl_b * 10 log10(d); returns the linear attenuation 10^(-alpha_dB/10).
double path_loss_linear(double d_m, double pl_a, double pl_b);

// The scalars every closed form is written in.
struct EffectiveCoeffs
{
    double beta_D = 0.0;
    double beta_E = 0.0;
    double k_tx2 = 0.0;
    double k_tot2 = 0.0;
    double a = 0.0;  // beta_E * G_hat / G
    double b = 0.0;  // beta_E (1 + k_tx^2) / N_{E-C}
    double c = 0.0;  // k_tx^2 a
    double d = 0.0;  // beta_D G
    double e = 0.0;  // k_tot^2 d

    // Gain-free parts: a = a_bar G_hat/G, c = c_bar G_hat/G, d = d_bar G, e = e_bar G.
    double a_bar = 0.0;
    double c_bar = 0.0;
    double d_bar = 0.0;
    double e_bar = 0.0;
};

// Per-link SNR scales and the gain-free coefficients.
EffectiveCoeffs derive_bar_coeffs(const SystemConfig& cfg);

// Full coefficient set for one destination draw (G_hat, G_check).
// Throws InfeasibleError when N_E == N_C (no artificial-noise directions).
EffectiveCoeffs derive_coeffs(const SystemConfig& cfg, double G_hat, double G_check);

// Per-draw coefficients from precomputed bar coefficients.
EffectiveCoeffs scale_coeffs(const EffectiveCoeffs& bar, double G_hat, double G_check);

} // namespace mmwsec

#endif
