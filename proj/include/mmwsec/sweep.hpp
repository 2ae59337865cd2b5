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
#ifndef MMWSEC_SWEEP_HPP
#define MMWSEC_SWEEP_HPP

#include "mmwsec/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmwsec
{

inline constexpr std::string_view kSweepSchema = "mmwsec.sweep.v1";

enum class SweepMode
{
    SopFixedRate,        // SOP of AN (optimised split) and MRT at fixed R_s
    SopOpa,              // optimised split: objective and SOP
    ThroughputOpa,       // throughput-optimal split
    ThroughputMrt,       // full-power transmission
    ThroughputEqualPower // tau = 0.5
};

std::string_view to_string(SweepMode m);
SweepMode parse_sweep_mode(std::string_view name);

// One curve: config overrides applied on top of the base configuration.
struct SweepSeries
{
    std::string label;
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct SweepSpec
{
    std::string name = "custom";
    SystemConfig base;
    std::string key;
    std::vector<double> values;
    std::vector<SweepMode> modes;
    std::vector<SweepSeries> series; // empty means one unnamed series
    std::int64_t trials = 2000;
    std::uint64_t seed = 1;
    std::string output;

    void validate() const;
};

struct SweepRow
{
    std::string series;
    std::string key;
    double value = 0.0;
    std::string scheme;
    std::string metric;
    double analytic = 0.0;
    double analytic_se = 0.0;
    double oracle = 0.0;
    double oracle_se = 0.0;
    std::string oracle_kind;
    double tau_star = 0.0;
    double accept_rate = 1.0;
    std::string tag;
    double tol = 0.0;

    // |analytic - oracle| <= tol; rows without a comparable pair pass.
    bool within_tolerance() const;
};

std::vector<std::string> preset_names();
// Throws DomainError for an unknown preset. trials == 0 keeps the preset default.
SweepSpec preset(std::string_view name, std::int64_t trials = 0, std::uint64_t seed = 1);

// Flat key = value text: name, key, values (comma list or start:stop:step),
// mode / modes (comma list), trials, seed, out, repeated
// "series = label: key=value, key=value" lines; any other key sets the base config.
SweepSpec parse_sweep_spec(std::istream& in);
SweepSpec load_sweep_spec(const std::string& path);

// Sweep points run in parallel; rows come back ordered by (series, value, mode).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

} // namespace mmwsec

#endif
