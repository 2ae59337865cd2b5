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
#ifndef MMWSEC_CHANNEL_HPP
#define MMWSEC_CHANNEL_HPP

#include "mmwsec/config.hpp"
#include "mmwsec/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace mmwsec
{

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

// Angular bins are numbered 1..M, matching the column numbering of the basis.
using IndexSet = std::vector<int>;

// Unitary basis whose columns are half-wavelength ULA steering vectors on the
// uniform grid phi_i = (2/M)(i - 1 - (M - 1)/2).
struct AngularBasis
{
    CMatrix W;

    int size() const { return static_cast<int>(W.cols()); }
};

AngularBasis build_basis(int M);

// Steering vector R(phi) of an M-element half-wavelength ULA, unit norm.
CVector steering_vector(int M, double phi);

// Columns of B named by the strictly increasing 1-based index set xi.
CMatrix select_columns(const CMatrix& B, const IndexSet& xi);

struct PathSets
{
    IndexSet xi_D;
    IndexSet xi_E;
    IndexSet xi_C; // xi_E ∩ xi_D
    IndexSet xi_A; // xi_E \ xi_C
    IndexSet xi_P; // xi_D \ xi_C

    // Builds the derived sets from the two path sets; both must be strictly increasing in [1, M].
    static PathSets from_sets(int M, IndexSet xi_D, IndexSet xi_E);
};

// xi_D is a uniform N_D-subset of the M bins; xi_E shares exactly N_C of them
// (a uniform subset of xi_D) and takes its other N_E - N_C bins uniformly from
// the complement.
PathSets sample_path_sets(int M, int N_D, int N_E, int N_C, RngStream& rng);

// Complex gains split by path class. Entries follow the bin order of the
// corresponding index set (xi_C for the hat vectors, xi_P / xi_A for the checks).
struct GainVectors
{
    CRowVector g_hat_D;
    CRowVector g_check_D;
    CRowVector g_hat_E;
    CRowVector g_check_E;
};

struct ChannelDraw
{
    double G_hat = 0.0;   // ||g_hat_D||^2
    double G_check = 0.0; // ||g_check_D||^2
    double G = 0.0;       // G_hat + G_check
    double u = 0.0;       // |g_hat_E g_hat_D^H / ||g_hat_D|| |^2
    double v = 0.0;       // ||g_check_E||^2
    // No common paths: u is set to 0 and the eavesdropper SNDR vanishes.
    bool eve_orthogonal = false;
    std::optional<GainVectors> gains;
};

// Draws iid CN(0,1) gains on every in-set bin and reduces them to the channel
// scalars. Gain vectors are kept only when keep_vectors is set.
ChannelDraw sample_channel(const PathSets& sets, RngStream& rng, bool keep_vectors = false);

// Same law without index sets: only the set sizes matter for the scalars.
ChannelDraw sample_channel(int N_C, int N_DC, int N_EC, RngStream& rng);

EffectiveCoeffs derive_coeffs(const SystemConfig& cfg, const ChannelDraw& draw);

// Gains of the full destination / eavesdropper path sets, in xi_D / xi_E order.
CRowVector destination_gains(const PathSets& sets, const GainVectors& g);
CRowVector eavesdropper_gains(const PathSets& sets, const GainVectors& g);

// h = sqrt(scale) * g_sub * S(W, xi)^H, with scale = M alpha / N.
CRowVector channel_vector(const AngularBasis& basis, const IndexSet& xi, const CRowVector& g_sub, double scale);

struct AnBeamformer
{
    CVector f1; // h_D^H / ||h_D||
    CMatrix F;  // S(W, xi_A)
};

// Information beam along h_D and artificial-noise beams on the eavesdropper-only bins.
AnBeamformer an_beamformer(const AngularBasis& basis, const PathSets& sets, const CRowVector& h_D);

// CSV dump: seed,G_hat,G_check,u,v
void write_draws_csv(std::ostream& out, std::uint64_t seed, std::span<const ChannelDraw> draws);

} // namespace mmwsec

#endif
