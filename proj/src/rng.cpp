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
#include "mmwsec/rng.hpp"

#include "mmwsec/parallel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace mmwsec
{

namespace
{

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr std::uint64_t kStreamSalt = 0x9E3779B97F4A7C15ULL;

} // namespace

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id)
{
    std::uint64_t key = seed;
    std::uint64_t mix = splitmix64(key) ^ (stream_id * kStreamSalt);
    std::uint64_t state = mix;
    for (auto& s : s_)
        s = splitmix64(state);
    // xoshiro must not start from the all-zero state
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
        s_[0] = 1;
}

RngStream::result_type RngStream::operator()()
{
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

RngStream RngStream::substream(std::uint64_t index) const
{
    std::uint64_t key = stream_id_ ^ (index + 1) * 0xD1B54A32D192ED03ULL;
    return RngStream(seed_, splitmix64(key));
}

double RngStream::uniform()
{
    // 53 random mantissa bits, shifted by half an ulp to exclude 0
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() { return normal_(*this); }

std::complex<double> RngStream::complex_normal()
{
    static const double kHalfSqrt = std::sqrt(0.5);
    const double re = normal_(*this);
    const double im = normal_(*this);
    return {kHalfSqrt * re, kHalfSqrt * im};
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("MMWSEC_THREADS"))
    {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace mmwsec
