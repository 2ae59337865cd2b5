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
#ifndef MMWSEC_SNDR_HPP
#define MMWSEC_SNDR_HPP

#include "mmwsec/config.hpp"

namespace mmwsec
{

struct SndrPair
{
    double y_D = 0.0;
    double y_E = 0.0;
    double tau = 0.0;
};

// tau d / (tau e + 1)
double sndr_destination(double tau, const EffectiveCoeffs& c);

// tau a u / ((1 - tau) b v + tau c u + 1)
double sndr_eve(double tau, double u, double v, const EffectiveCoeffs& c);

SndrPair sndr_pair(double tau, double u, double v, const EffectiveCoeffs& c);

// Ideal-hardware forms: tau d and N_{E-C} tau a u / ((1 - tau) beta_E v + N_{E-C}).
double sndr_destination_ideal(double tau, const EffectiveCoeffs& c);
double sndr_eve_ideal(double tau, double u, double v, const EffectiveCoeffs& c, int n_ec);

// Destination SNDR limit as P grows: 1 / k_tot^2, +infinity for ideal hardware.
double high_snr_ceiling(double k_tot2);

} // namespace mmwsec

#endif
