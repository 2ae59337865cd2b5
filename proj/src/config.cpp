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
#include "mmwsec/config.hpp"

#include "mmwsec/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace mmwsec
{

namespace
{

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_int(const std::string& key, const std::string& text)
{
    int value = 0;
    const auto t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw DomainError("config: key '" + key + "' expects an integer, got '" + text + "'");
    return value;
}

double parse_double(const std::string& key, const std::string& text)
{
    const auto t = trim(text);
    std::size_t pos = 0;
    double value = 0.0;
    try
    {
        value = std::stod(t, &pos);
    }
    catch (const std::exception&)
    {
        pos = 0;
    }
    if (t.empty() || pos != t.size())
        throw DomainError("config: key '" + key + "' expects a number, got '" + text + "'");
    return value;
}

std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

void SystemConfig::validate() const
{
    auto fail = [](const std::string& what) { throw DomainError("config: " + what); };
    if (M < 1)
        fail("M must be positive");
    if (N_D < 1 || N_E < 0 || N_C < 0)
        fail("path counts must satisfy N_D >= 1, N_E >= 0, N_C >= 0");
    if (N_D >= M || N_E >= M)
        fail("resolvable paths must be fewer than antennas (N_D < M, N_E < M)");
    if (N_C > N_D || N_C > N_E)
        fail("N_C must not exceed min(N_D, N_E)");
    if (N_D + n_ec() > M)
        fail("N_D + N_E - N_C exceeds the number of angular bins M");
    if (!(k_tx >= 0.0 && k_tx < 1.0) || !(k_rx >= 0.0 && k_rx < 1.0))
        fail("EVMs k_tx, k_rx must lie in [0, 1)");
    if (!(d_D_m > 0.0) || !(d_E_m > 0.0))
        fail("distances must be positive");
    if (!(R_s >= 0.0))
        fail("R_s must be non-negative");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        fail("epsilon must lie in (0, 1]");
    if (!std::isfinite(P_dBm) || !std::isfinite(sigma_n2_dBm) || !std::isfinite(pl_a) || !std::isfinite(pl_b))
        fail("power and path-loss parameters must be finite");
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = {"M",    "N_D",   "N_E",   "N_C",  "P_dBm", "sigma_n2_dBm", "k_tx",
                                                  "k_rx", "d_D_m", "d_E_m", "pl_a", "pl_b",  "R_s",          "epsilon"};
    return keys;
}

bool is_config_key(const std::string& key)
{
    for (const auto& k : config_keys())
        if (k == key)
            return true;
    return false;
}

void set_config_value(SystemConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "M")
        cfg.M = parse_int(key, value);
    else if (key == "N_D")
        cfg.N_D = parse_int(key, value);
    else if (key == "N_E")
        cfg.N_E = parse_int(key, value);
    else if (key == "N_C")
        cfg.N_C = parse_int(key, value);
    else if (key == "P_dBm")
        cfg.P_dBm = parse_double(key, value);
    else if (key == "sigma_n2_dBm")
        cfg.sigma_n2_dBm = parse_double(key, value);
    else if (key == "k_tx")
        cfg.k_tx = parse_double(key, value);
    else if (key == "k_rx")
        cfg.k_rx = parse_double(key, value);
    else if (key == "d_D_m")
        cfg.d_D_m = parse_double(key, value);
    else if (key == "d_E_m")
        cfg.d_E_m = parse_double(key, value);
    else if (key == "pl_a")
        cfg.pl_a = parse_double(key, value);
    else if (key == "pl_b")
        cfg.pl_b = parse_double(key, value);
    else if (key == "R_s")
        cfg.R_s = parse_double(key, value);
    else if (key == "epsilon")
        cfg.epsilon = parse_double(key, value);
    else
        throw DomainError("config: unknown key '" + key + "'");
}

std::string get_config_value(const SystemConfig& cfg, const std::string& key)
{
    if (key == "M")
        return std::to_string(cfg.M);
    if (key == "N_D")
        return std::to_string(cfg.N_D);
    if (key == "N_E")
        return std::to_string(cfg.N_E);
    if (key == "N_C")
        return std::to_string(cfg.N_C);
    if (key == "P_dBm")
        return format_double(cfg.P_dBm);
    if (key == "sigma_n2_dBm")
        return format_double(cfg.sigma_n2_dBm);
    if (key == "k_tx")
        return format_double(cfg.k_tx);
    if (key == "k_rx")
        return format_double(cfg.k_rx);
    if (key == "d_D_m")
        return format_double(cfg.d_D_m);
    if (key == "d_E_m")
        return format_double(cfg.d_E_m);
    if (key == "pl_a")
        return format_double(cfg.pl_a);
    if (key == "pl_b")
        return format_double(cfg.pl_b);
    if (key == "R_s")
        return format_double(cfg.R_s);
    if (key == "epsilon")
        return format_double(cfg.epsilon);
    throw DomainError("config: unknown key '" + key + "'");
}

SystemConfig parse_config(std::istream& in, std::map<std::string, std::string>* extra)
{
    SystemConfig cfg;
    bool have_ne = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: line " + std::to_string(lineno) + " is not key=value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (is_config_key(key))
        {
            set_config_value(cfg, key, value);
            have_ne = have_ne || key == "N_E";
        }
        else if (extra != nullptr)
            (*extra)[key] = value;
        else
            throw DomainError("config: unknown key '" + key + "' on line " + std::to_string(lineno));
    }
    if (!have_ne)
        cfg.N_E = cfg.N_D;
    return cfg;
}

SystemConfig load_config(const std::string& path, std::map<std::string, std::string>* extra)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("config: cannot open '" + path + "'");
    return parse_config(in, extra);
}

void write_config(std::ostream& out, const SystemConfig& cfg)
{
    for (const auto& key : config_keys())
        out << key << " = " << get_config_value(cfg, key) << '\n';
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

double path_loss_linear(double d_m, double pl_a, double pl_b)
{
    if (!(d_m > 0.0))
        throw DomainError("path_loss_linear: distance must be positive");
    const double alpha_db = pl_a + pl_b * 10.0 * std::log10(d_m);
    return std::pow(10.0, -alpha_db / 10.0);
}

EffectiveCoeffs derive_bar_coeffs(const SystemConfig& cfg)
{
    cfg.validate();
    if (cfg.n_ec() == 0)
        throw InfeasibleError("derive_coeffs: N_E == N_C leaves no artificial-noise directions (N_{E-C} = 0)");

    // P/sigma^2 is formed in dB to keep the ratio exact for large spreads.
    const double snr_tx = std::pow(10.0, (cfg.P_dBm - cfg.sigma_n2_dBm) / 10.0);
    const double alpha_D = path_loss_linear(cfg.d_D_m, cfg.pl_a, cfg.pl_b);
    const double alpha_E = path_loss_linear(cfg.d_E_m, cfg.pl_a, cfg.pl_b);

    EffectiveCoeffs c;
    c.beta_D = snr_tx * cfg.M * alpha_D / cfg.N_D;
    c.beta_E = cfg.N_E > 0 ? snr_tx * cfg.M * alpha_E / cfg.N_E : 0.0;
    c.k_tx2 = cfg.k_tx2();
    c.k_tot2 = cfg.k_tot2();
    c.b = c.beta_E * (1.0 + c.k_tx2) / cfg.n_ec();
    c.a_bar = c.beta_E;
    c.c_bar = c.k_tx2 * c.beta_E;
    c.d_bar = c.beta_D;
    c.e_bar = c.k_tot2 * c.beta_D;
    return c;
}

EffectiveCoeffs scale_coeffs(const EffectiveCoeffs& bar, double G_hat, double G_check)
{
    if (!(G_hat >= 0.0) || !(G_check >= 0.0))
        throw DomainError("derive_coeffs: channel gains must be non-negative");
    EffectiveCoeffs c = bar;
    const double G = G_hat + G_check;
    const double share = G > 0.0 ? G_hat / G : 0.0;
    c.a = c.a_bar * share;
    c.c = c.k_tx2 * c.a;
    c.d = c.d_bar * G;
    c.e = c.k_tot2 * c.d;
    return c;
}

EffectiveCoeffs derive_coeffs(const SystemConfig& cfg, double G_hat, double G_check)
{
    return scale_coeffs(derive_bar_coeffs(cfg), G_hat, G_check);
}

} // namespace mmwsec
