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
#ifndef MMWSEC_RNG_HPP
#define MMWSEC_RNG_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <random>

namespace mmwsec
{

// xoshiro256++ stream keyed by (seed, stream id). Substreams are derived by
// hashing the parent key with a child index, so a trial block always sees the
// same numbers no matter which thread runs it.
class RngStream
{
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    // Independent child stream; does not advance *this.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Uniform on the open interval (0, 1).
    double uniform();
    double normal();
    // Circularly-symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
    std::complex<double> complex_normal();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t s_[4];
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// SplitMix64 finaliser, exposed for deriving keys.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace mmwsec

#endif
