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
#include "mmwsec/channel.hpp"

#include "mmwsec/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <ostream>

namespace mmwsec
{

namespace
{

void check_index_set(const IndexSet& xi, int limit, const char* what)
{
    for (std::size_t i = 0; i < xi.size(); ++i)
    {
        if (xi[i] < 1 || xi[i] > limit)
            throw DomainError(std::string(what) + ": index " + std::to_string(xi[i]) + " outside [1, " +
                              std::to_string(limit) + "]");
        if (i > 0 && xi[i] <= xi[i - 1])
            throw DomainError(std::string(what) + ": indices must be strictly increasing");
    }
}

// k distinct values drawn uniformly from pool (partial Fisher-Yates), returned sorted.
IndexSet draw_subset(std::vector<int> pool, int k, RngStream& rng)
{
    const auto n = pool.size();
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
    {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    IndexSet out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

CRowVector gaussian_row(int n, RngStream& rng)
{
    CRowVector g(n);
    for (int i = 0; i < n; ++i)
        g[i] = rng.complex_normal();
    return g;
}

// Places the entries of `part` (ordered like `part_bins`) into the slots of `full_bins`.
void scatter(const IndexSet& full_bins, const IndexSet& part_bins, const CRowVector& part, CRowVector& full)
{
    std::size_t j = 0;
    for (std::size_t i = 0; i < full_bins.size() && j < part_bins.size(); ++i)
        if (full_bins[i] == part_bins[j])
            full[static_cast<Eigen::Index>(i)] = part[static_cast<Eigen::Index>(j++)];
}

double common_projection(const CRowVector& g_hat_E, const CRowVector& g_hat_D, double G_hat)
{
    if (G_hat <= 0.0)
        return 0.0;
    const std::complex<double> inner = (g_hat_E * g_hat_D.adjoint())(0, 0);
    return std::norm(inner) / G_hat;
}

} // namespace

CVector steering_vector(int M, double phi)
{
    // Delta / lambda = 1/2
    CVector r(M);
    const double scale = 1.0 / std::sqrt(static_cast<double>(M));
    for (int m = 0; m < M; ++m)
        r[m] = scale * std::polar(1.0, -std::numbers::pi * m * phi);
    return r;
}

AngularBasis build_basis(int M)
{
    if (M < 1)
        throw DomainError("build_basis: M must be positive");
    AngularBasis basis;
    basis.W.resize(M, M);
    const double spacing = 2.0 / M;
    for (int i = 1; i <= M; ++i)
        basis.W.col(i - 1) = steering_vector(M, spacing * (i - 1 - (M - 1) / 2.0));
    return basis;
}

CMatrix select_columns(const CMatrix& B, const IndexSet& xi)
{
    check_index_set(xi, static_cast<int>(B.cols()), "select_columns");
    CMatrix out(B.rows(), static_cast<Eigen::Index>(xi.size()));
    for (std::size_t j = 0; j < xi.size(); ++j)
        out.col(static_cast<Eigen::Index>(j)) = B.col(xi[j] - 1);
    return out;
}

PathSets PathSets::from_sets(int M, IndexSet xi_D, IndexSet xi_E)
{
    check_index_set(xi_D, M, "PathSets");
    check_index_set(xi_E, M, "PathSets");
    PathSets s;
    s.xi_D = std::move(xi_D);
    s.xi_E = std::move(xi_E);
    std::set_intersection(s.xi_E.begin(), s.xi_E.end(), s.xi_D.begin(), s.xi_D.end(), std::back_inserter(s.xi_C));
    std::set_difference(s.xi_E.begin(), s.xi_E.end(), s.xi_C.begin(), s.xi_C.end(), std::back_inserter(s.xi_A));
    std::set_difference(s.xi_D.begin(), s.xi_D.end(), s.xi_C.begin(), s.xi_C.end(), std::back_inserter(s.xi_P));
    return s;
}

PathSets sample_path_sets(int M, int N_D, int N_E, int N_C, RngStream& rng)
{
    if (M < 1 || N_D < 0 || N_E < 0 || N_C < 0 || N_C > N_D || N_C > N_E || N_D + (N_E - N_C) > M)
        throw DomainError("sample_path_sets: infeasible path counts");

    std::vector<int> bins(static_cast<std::size_t>(M));
    std::iota(bins.begin(), bins.end(), 1);
    IndexSet xi_D = draw_subset(bins, N_D, rng);

    IndexSet common = draw_subset(std::vector<int>(xi_D.begin(), xi_D.end()), N_C, rng);
    std::vector<int> outside;
    std::set_difference(bins.begin(), bins.end(), xi_D.begin(), xi_D.end(), std::back_inserter(outside));
    IndexSet only_E = draw_subset(std::move(outside), N_E - N_C, rng);

    IndexSet xi_E;
    std::merge(common.begin(), common.end(), only_E.begin(), only_E.end(), std::back_inserter(xi_E));
    return PathSets::from_sets(M, std::move(xi_D), std::move(xi_E));
}

ChannelDraw sample_channel(const PathSets& sets, RngStream& rng, bool keep_vectors)
{
    GainVectors g;
    g.g_hat_D = gaussian_row(static_cast<int>(sets.xi_C.size()), rng);
    g.g_check_D = gaussian_row(static_cast<int>(sets.xi_P.size()), rng);
    g.g_hat_E = gaussian_row(static_cast<int>(sets.xi_C.size()), rng);
    g.g_check_E = gaussian_row(static_cast<int>(sets.xi_A.size()), rng);

    ChannelDraw d;
    d.G_hat = g.g_hat_D.squaredNorm();
    d.G_check = g.g_check_D.squaredNorm();
    d.G = d.G_hat + d.G_check;
    d.v = g.g_check_E.squaredNorm();
    d.eve_orthogonal = sets.xi_C.empty();
    d.u = d.eve_orthogonal ? 0.0 : common_projection(g.g_hat_E, g.g_hat_D, d.G_hat);
    if (keep_vectors)
        d.gains = std::move(g);
    return d;
}

ChannelDraw sample_channel(int N_C, int N_DC, int N_EC, RngStream& rng)
{
    if (N_C < 0 || N_DC < 0 || N_EC < 0)
        throw DomainError("sample_channel: negative path count");
    ChannelDraw d;
    std::complex<double> inner = 0.0;
    for (int i = 0; i < N_C; ++i)
    {
        const auto gd = rng.complex_normal();
        const auto ge = rng.complex_normal();
        d.G_hat += std::norm(gd);
        inner += ge * std::conj(gd);
    }
    for (int i = 0; i < N_DC; ++i)
        d.G_check += std::norm(rng.complex_normal());
    for (int i = 0; i < N_EC; ++i)
        d.v += std::norm(rng.complex_normal());
    d.G = d.G_hat + d.G_check;
    d.eve_orthogonal = N_C == 0;
    d.u = (d.eve_orthogonal || d.G_hat <= 0.0) ? 0.0 : std::norm(inner) / d.G_hat;
    return d;
}

EffectiveCoeffs derive_coeffs(const SystemConfig& cfg, const ChannelDraw& draw)
{
    return derive_coeffs(cfg, draw.G_hat, draw.G_check);
}

CRowVector destination_gains(const PathSets& sets, const GainVectors& g)
{
    CRowVector full = CRowVector::Zero(static_cast<Eigen::Index>(sets.xi_D.size()));
    scatter(sets.xi_D, sets.xi_C, g.g_hat_D, full);
    scatter(sets.xi_D, sets.xi_P, g.g_check_D, full);
    return full;
}

CRowVector eavesdropper_gains(const PathSets& sets, const GainVectors& g)
{
    CRowVector full = CRowVector::Zero(static_cast<Eigen::Index>(sets.xi_E.size()));
    scatter(sets.xi_E, sets.xi_C, g.g_hat_E, full);
    scatter(sets.xi_E, sets.xi_A, g.g_check_E, full);
    return full;
}

CRowVector channel_vector(const AngularBasis& basis, const IndexSet& xi, const CRowVector& g_sub, double scale)
{
    if (static_cast<std::size_t>(g_sub.size()) != xi.size())
        throw DomainError("channel_vector: gain count does not match the index set");
    const CMatrix Wsub = select_columns(basis.W, xi);
    return std::sqrt(scale) * (g_sub * Wsub.adjoint());
}

AnBeamformer an_beamformer(const AngularBasis& basis, const PathSets& sets, const CRowVector& h_D)
{
    if (h_D.size() != basis.size())
        throw DomainError("an_beamformer: channel length does not match the basis");
    const double norm = h_D.norm();
    if (!(norm > 0.0))
        throw DegenerateChannelError("an_beamformer: destination channel has zero norm");
    AnBeamformer bf;
    bf.f1 = h_D.adjoint() / norm;
    bf.F = select_columns(basis.W, sets.xi_A);
    return bf;
}

void write_draws_csv(std::ostream& out, std::uint64_t seed, std::span<const ChannelDraw> draws)
{
    out << "seed,G_hat,G_check,u,v\n";
    out << std::setprecision(17);
    for (const auto& d : draws)
        out << seed << ',' << d.G_hat << ',' << d.G_check << ',' << d.u << ',' << d.v << '\n';
}

} // namespace mmwsec
