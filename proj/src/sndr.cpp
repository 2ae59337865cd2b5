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
#include "mmwsec/sndr.hpp"

#include <limits>

namespace mmwsec
{

double sndr_destination(double tau, const EffectiveCoeffs& c) { return tau * c.d / (tau * c.e + 1.0); }

double sndr_eve(double tau, double u, double v, const EffectiveCoeffs& c)
{
    const double signal = tau * c.a * u;
    if (signal == 0.0)
        return 0.0;
    return signal / ((1.0 - tau) * c.b * v + tau * c.c * u + 1.0);
}

SndrPair sndr_pair(double tau, double u, double v, const EffectiveCoeffs& c)
{
    return {sndr_destination(tau, c), sndr_eve(tau, u, v, c), tau};
}

double sndr_destination_ideal(double tau, const EffectiveCoeffs& c) { return tau * c.d; }

double sndr_eve_ideal(double tau, double u, double v, const EffectiveCoeffs& c, int n_ec)
{
    const double signal = n_ec * tau * c.a * u;
    if (signal == 0.0)
        return 0.0;
    return signal / ((1.0 - tau) * c.beta_E * v + n_ec);
}

double high_snr_ceiling(double k_tot2)
{
    if (k_tot2 <= 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / k_tot2;
}

} // namespace mmwsec
