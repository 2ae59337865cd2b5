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
#ifndef MMWSEC_VALIDATION_HPP
#define MMWSEC_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mmwsec
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions
{
    std::uint64_t seed = 1;
    std::int64_t mc_trials = 200000; // per Monte-Carlo comparison
    int draws = 100;                 // optimiser draws compared against grids
    int grid_points = 10000;
};

// Reduced oracle suite: each closed form against its Monte-Carlo or grid
// counterpart on a handful of random settings.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

} // namespace mmwsec

#endif
