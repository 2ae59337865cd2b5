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
// Command-line front-end: parameter sweeps with CSV output, the reduced oracle
// suite, and configuration printing.

#include "mmwsec/config.hpp"
#include "mmwsec/error.hpp"
#include "mmwsec/sweep.hpp"
#include "mmwsec/validation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;

// Applies every key = value line of a config file on top of cfg.
void apply_config_file(mmwsec::SystemConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw mmwsec::DomainError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw mmwsec::DomainError(path + ":" + std::to_string(lineno) + ": expected key = value");
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        if (!mmwsec::is_config_key(key))
            throw mmwsec::DomainError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        mmwsec::set_config_value(cfg, key, strip(line.substr(eq + 1)));
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mmwsec: secrecy analysis for AN-masked mm-Wave beamforming with impaired hardware"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::int64_t trials = 0;
    std::string out_path;
    std::string config_path;
    unsigned threads = 0;
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
    app.add_option("--trials", trials, "Trials per estimate (0 keeps the preset default)");
    app.add_option("--out", out_path, "Output path (default: stdout)");
    app.add_option("--config", config_path, "key = value file applied on top of the base configuration");
    app.add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

    std::map<std::string, std::string> overrides;
    for (const auto& key : mmwsec::config_keys())
        app.add_option_function<std::string>(
            "--" + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
            "Override configuration key " + key);

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
    std::string preset;
    std::string spec_path;
    auto* preset_opt = sweep->add_option("--preset", preset, "Preset sweep")->check(CLI::IsMember(mmwsec::preset_names()));
    auto* spec_opt = sweep->add_option("--spec", spec_path, "Sweep specification file")->check(CLI::ExistingFile);
    preset_opt->excludes(spec_opt);
    sweep->require_option(1);

    auto* validate = app.add_subcommand("validate", "Run the reduced oracle suite");
    auto* show = app.add_subcommand("config", "Print the effective configuration");

    CLI11_PARSE(app, argc, argv);

    try
    {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty())
        {
            file.open(out_path);
            if (!file)
                throw mmwsec::DomainError("cannot write '" + out_path + "'");
            out = &file;
        }

        auto finish_config = [&](mmwsec::SystemConfig& cfg) {
            if (!config_path.empty())
                apply_config_file(cfg, config_path);
            for (const auto& [k, v] : overrides)
                mmwsec::set_config_value(cfg, k, v);
            cfg.validate();
        };

        if (*sweep)
        {
            mmwsec::SweepSpec spec;
            if (!preset.empty())
                spec = mmwsec::preset(preset, trials, seed);
            else
            {
                spec = mmwsec::load_sweep_spec(spec_path);
                if (trials > 0)
                    spec.trials = trials;
                if (app.count("--seed") > 0)
                    spec.seed = seed;
                if (out_path.empty() && !spec.output.empty())
                {
                    file.open(spec.output);
                    if (!file)
                        throw mmwsec::DomainError("cannot write '" + spec.output + "'");
                    out = &file;
                }
            }
            finish_config(spec.base);
            const auto rows = mmwsec::run_sweep(spec, threads);
            mmwsec::write_sweep_csv(*out, spec, rows);
            int failures = 0;
            for (const auto& r : rows)
                if (!r.within_tolerance())
                {
                    ++failures;
                    std::cerr << "tolerance exceeded: series " << r.series << ", " << r.key << " = " << r.value
                              << ", " << r.scheme << "/" << r.metric << ": analytic " << r.analytic << " vs oracle "
                              << r.oracle << " (tol " << r.tol << ")\n";
                }
            return failures > 0 ? kExitTolerance : 0;
        }
        if (*validate)
        {
            mmwsec::ValidationOptions opt;
            opt.seed = seed;
            if (trials > 0)
                opt.mc_trials = trials;
            const auto results = mmwsec::run_validation(opt);
            bool ok = true;
            for (const auto& r : results)
            {
                *out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
                ok = ok && r.passed;
            }
            return ok ? 0 : kExitTolerance;
        }
        if (*show)
        {
            mmwsec::SystemConfig cfg;
            finish_config(cfg);
            mmwsec::write_config(*out, cfg);
            return 0;
        }
    }
    catch (const mmwsec::DomainError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance + 2;
    }
    return 0;
}
