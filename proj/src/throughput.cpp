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
#include "mmwsec/throughput.hpp"

#include "mmwsec/channel.hpp"
#include "mmwsec/error.hpp"
#include "mmwsec/parallel.hpp"
#include "mmwsec/rng.hpp"
#include "mmwsec/special.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace mmwsec
{

namespace
{

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;
constexpr std::uint64_t kThroughputStream = 0x7468726f75676870ULL;
constexpr std::int64_t kBlockSize = 4096;

// L + ln(Q + eps): same sign as Q, but free of the exp underflow.
double q_log_margin(double k, double tau, const KTauSolver& s, double L)
{
    const double w = s.a - s.c * tau * k;
    if (!(w > 0.0))
        throw DomainError("q_of_k: a - c tau k must be positive");
    const double r = (1.0 - tau) * s.b * k / w;
    return L - k / w - s.n_ec * std::log1p(r);
}

struct KBracket
{
    double lo = 0.0;
    double hi = 0.0;
    bool hi_is_pole = false; // hi = a / (c tau), where Q -> -eps
};

KBracket k_bracket(double tau, const KTauSolver& s, double L)
{
    KBracket br;
    const double ctl = s.c * tau * L;
    if (ctl < 1.0)
        br.hi = s.a * L;
    else
    {
        br.hi = s.a / (s.c * tau);
        br.hi_is_pole = true;
    }
    return br;
}

double solve_k_with_tol(double tau, const KTauSolver& s, double tol_override)
{
    if (!(tau > 0.0 && tau <= 1.0))
        throw DomainError("solve_k: tau must lie in (0, 1]");
    s.validate();
    const double L = -std::log(s.epsilon);
    if (s.a == 0.0 || L == 0.0)
        return 0.0;
    if (tau == 1.0)
        return k_max_tau1(s.a, s.c, s.epsilon);
    KBracket br = k_bracket(tau, s, L);
    const double tol = tol_override > 0.0 ? tol_override : 1e-10 * std::max(1.0, br.hi);
    double lo = br.lo;
    double hi = br.hi;
    int iter = 0;
    while (hi - lo > tol)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (q_log_margin(mid, tau, s, L) > 0.0)
            lo = mid;
        else
            hi = mid;
        if (++iter > s.max_iters)
        {
            std::ostringstream msg;
            msg << "solve_k: bisection exceeded " << s.max_iters << " iterations; bracket [" << lo << ", " << hi
                << "], tau = " << tau;
            throw ConvergenceError(msg.str());
        }
    }
    return 0.5 * (lo + hi);
}

struct RatePoint
{
    double tau = 0.0;
    double k = 0.0;
    double rate = 0.0;
    double slope = 0.0;
};

RatePoint rate_point(double tau, const EffectiveCoeffs& coeffs, const KTauSolver& s, double tol = 0.0)
{
    RatePoint p;
    p.tau = tau;
    p.k = solve_k_with_tol(tau, s, tol);
    const double dk = dk_dtau(tau, p.k, s);
    p.rate = rs_of_tau(tau, p.k, coeffs);
    p.slope = drs_dtau(tau, p.k, dk, coeffs);
    return p;
}

std::vector<double> scan_grid(int points)
{
    // a quarter of the points log-spaced in [1e-6, 1e-2), the rest linear up to 1
    const int n_log = std::max(2, points / 4);
    const int n_lin = std::max(2, points - n_log);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n_log + n_lin));
    for (int i = 0; i < n_log; ++i)
        grid.push_back(std::pow(10.0, -6.0 + 4.0 * i / n_log));
    for (int i = 0; i < n_lin; ++i)
        grid.push_back(0.01 + 0.99 * i / (n_lin - 1));
    return grid;
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

template <class F>
double integrate(F&& f, double lo, double hi, const QuadratureSpec& spec, const char* what)
{
    if (!(hi > lo))
        return 0.0;
    double err = 0.0;
    double l1 = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, spec.max_depth, spec.rel_tol, &err, &l1);
    if (!std::isfinite(value) || err > std::max(1e-6 * l1, 1e-14))
    {
        std::ostringstream msg;
        msg.precision(12);
        msg << what << ": quadrature did not converge on [" << lo << ", " << hi << "]; Kronrod estimate " << value
            << ", Gauss estimate " << value - err << " (gap " << err << ")";
        throw ConvergenceError(msg.str());
    }
    return value;
}

double gamma_pdf(int shape, double x)
{
    if (x <= 0.0)
        return shape == 1 && x == 0.0 ? 1.0 : 0.0;
    return boost::math::gamma_p_derivative(static_cast<double>(shape), x);
}

double gamma_cap(int shape, double tail)
{
    return boost::math::gamma_q_inv(static_cast<double>(shape), tail);
}

// G_hat above which the threshold is non-positive (all G_check transmit);
// +inf when that never happens.
double always_transmit_from(const EffectiveCoeffs& bar, double L)
{
    const double s = bar.c_bar * L;
    const double t = bar.a_bar * L;
    const double slope = 1.0 + s - t * bar.e_bar / bar.d_bar;
    if (slope <= 0.0)
        return std::numeric_limits<double>::infinity();
    return (t / bar.d_bar) / slope;
}

// No common paths: E over G_check of log2(1 + Y_D(1)).
double no_leakage_throughput(int n_dc, const EffectiveCoeffs& bar, const QuadratureSpec& spec)
{
    const double cap = gamma_cap(n_dc, spec.tail_mass);
    auto f = [&](double x) {
        return gamma_pdf(n_dc, x) * std::log1p(bar.d_bar * x / (bar.e_bar * x + 1.0)) * kInvLn2;
    };
    return integrate(f, 0.0, cap, spec, "mrt_throughput");
}

template <class Inner>
double outer_integral(const SystemConfig& cfg, const EffectiveCoeffs& bar, const QuadratureSpec& spec, Inner&& inner)
{
    const double L = -std::log(cfg.epsilon);
    const double y_cap = gamma_cap(cfg.N_C, spec.tail_mass);
    const double y_split = always_transmit_from(bar, L);
    auto f = [&](double y) { return gamma_pdf(cfg.N_C, y) * inner(y); };
    if (y_split > 0.0 && y_split < y_cap)
        return integrate(f, 0.0, y_split, spec, "mrt_throughput") + integrate(f, y_split, y_cap, spec, "mrt_throughput");
    return integrate(f, 0.0, y_cap, spec, "mrt_throughput");
}

void check_mrt_config(const SystemConfig& cfg)
{
    cfg.validate();
    if (cfg.n_dc() < 1)
        throw DomainError("mrt_throughput: needs at least one destination-only path (N_D > N_C)");
}

} // namespace

KTauSolver KTauSolver::from(const EffectiveCoeffs& coeffs, double epsilon, int n_ec)
{
    KTauSolver s;
    s.epsilon = epsilon;
    s.n_ec = n_ec;
    s.a = coeffs.a;
    s.b = coeffs.b;
    s.c = coeffs.c;
    s.validate();
    return s;
}

void KTauSolver::validate() const
{
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw DomainError("KTauSolver: epsilon must lie in (0, 1]");
    if (n_ec < 1)
        throw DomainError("KTauSolver: N_{E-C} must be at least 1");
    if (!(a >= 0.0 && b >= 0.0 && c >= 0.0))
        throw DomainError("KTauSolver: coefficients must be non-negative");
    if (tol_k < 0.0 || max_iters < 1)
        throw DomainError("KTauSolver: invalid tolerance or iteration budget");
}

double q_of_k(double k, double tau, double a, double b, double c, int n_ec, double epsilon)
{
    const double w = a - c * tau * k;
    if (!(w > 0.0))
        throw DomainError("q_of_k: a - c tau k must be positive");
    const double r = (1.0 - tau) * b * k / w;
    return std::exp(-k / w - n_ec * std::log1p(r)) - epsilon;
}

double q_of_k(double k, double tau, const KTauSolver& s)
{
    return q_of_k(k, tau, s.a, s.b, s.c, s.n_ec, s.epsilon);
}

double k_max_tau1(double a, double c, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw DomainError("k_max_tau1: epsilon must lie in (0, 1]");
    if (!(a >= 0.0 && c >= 0.0))
        throw DomainError("k_max_tau1: coefficients must be non-negative");
    const double L = -std::log(epsilon);
    return a * L / (1.0 + c * L);
}

double solve_k(double tau, const KTauSolver& s)
{
    return solve_k_with_tol(tau, s, s.tol_k);
}

double dk_dtau(double tau, double k, const KTauSolver& s)
{
    if (s.a == 0.0 || k == 0.0)
        return 0.0;
    const double a = s.a;
    const double b = s.b;
    const double c = s.c;
    const double N = s.n_ec;
    const double w = a - c * tau * k;
    const double om = 1.0 - tau;
    const double num = c * k * k * (w + om * b * k) + N * b * k * (c * k - a) * w;
    const double den = a * (w + om * b * k) + N * om * a * b * w;
    return -num / den;
}

double rs_of_tau(double tau, double k, const EffectiveCoeffs& coeffs)
{
    const double up = std::log1p(tau * (coeffs.d + coeffs.e));
    const double down = std::log1p(tau * (k + coeffs.e + tau * coeffs.e * k));
    return (up - down) * kInvLn2;
}

double drs_dtau(double tau, double k, double dk, const EffectiveCoeffs& coeffs)
{
    const double d = coeffs.d;
    const double e = coeffs.e;
    const double gain = d / ((tau * e + 1.0) * (tau * (e + d) + 1.0));
    const double loss = (k + tau * dk) / (1.0 + tau * k);
    return (gain - loss) * kInvLn2;
}

double rs_at(double tau, const EffectiveCoeffs& coeffs, const KTauSolver& s)
{
    return rs_of_tau(tau, solve_k(tau, s), coeffs);
}

double z_at_unity(const EffectiveCoeffs& coeffs, const KTauSolver& s)
{
    const double k = k_max_tau1(s.a, s.c, s.epsilon);
    return drs_dtau(1.0, k, dk_dtau(1.0, k, s), coeffs);
}

std::string_view to_string(ThroughputCase c)
{
    switch (c)
    {
    case ThroughputCase::Concave_Boundary:
        return "Concave_Boundary";
    case ThroughputCase::Concave_Interior:
        return "Concave_Interior";
    case ThroughputCase::NonConcave_Tau1_vs_1:
        return "NonConcave_Tau1_vs_1";
    case ThroughputCase::NonConcave_Tau1p_vs_Tau3:
        return "NonConcave_Tau1p_vs_Tau3";
    case ThroughputCase::Silent:
        return "Silent";
    }
    return "?";
}

ThroughputResult optimize_tau_throughput(const EffectiveCoeffs& coeffs, const KTauSolver& s,
                                         const ThroughputOptions& options)
{
    s.validate();
    if (options.scan_points < 4)
        throw DomainError("optimize_tau_throughput: need at least 4 scan points");

    ThroughputResult res;
    const std::vector<double> grid = scan_grid(options.scan_points);
    std::vector<RatePoint> pts;
    pts.reserve(grid.size());
    for (double tau : grid)
        pts.push_back(rate_point(tau, coeffs, s));
    res.z_at_one = pts.back().slope;

    RatePoint best = pts.back();
    for (const auto& p : pts)
        if (p.rate > best.rate)
            best = p;

    for (std::size_t j = 0; j + 1 < pts.size(); ++j)
    {
        if (!(pts[j].slope > 0.0 && pts[j + 1].slope <= 0.0))
            continue;
        ++res.stationary_maxima;
        double lo = pts[j].tau;
        double hi = pts[j + 1].tau;
        for (int it = 0; it < 200 && hi - lo > options.tau_tol * hi; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (rate_point(mid, coeffs, s).slope > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        const RatePoint p = rate_point(0.5 * (lo + hi), coeffs, s);
        if (p.rate > best.rate)
            best = p;
    }

    if (!(best.rate > 0.0))
    {
        res.case_tag = ThroughputCase::Silent;
        res.transmit = false;
        res.tau_star = 0.0;
        res.R_s_star = 0.0;
        return res;
    }
    res.transmit = true;
    res.tau_star = best.tau;
    res.R_s_star = best.rate;

    bool concave = true;
    if (options.concavity_points > 0)
    {
        const double h = 1e-4;
        const int n = options.concavity_points;
        std::vector<double> curv(static_cast<std::size_t>(n));
        double scale = 1.0;
        for (int i = 0; i < n; ++i)
        {
            const double tau = std::min(1.0 - h, std::max(2.0 * h, (i + 0.5) / n));
            const double tight = 1e-15;
            const RatePoint up = rate_point(tau + h, coeffs, s, tight * std::max(1.0, s.a));
            const RatePoint dn = rate_point(tau - h, coeffs, s, tight * std::max(1.0, s.a));
            curv[static_cast<std::size_t>(i)] = (up.slope - dn.slope) / (2.0 * h);
            scale = std::max({scale, std::abs(up.slope), std::abs(dn.slope)});
        }
        for (double v : curv)
            if (v > options.concavity_slack * scale)
                concave = false;
    }
    else
        concave = res.stationary_maxima <= 1;

    if (concave)
        res.case_tag = res.z_at_one > 0.0 ? ThroughputCase::Concave_Boundary : ThroughputCase::Concave_Interior;
    else
        res.case_tag = res.stationary_maxima >= 2 ? ThroughputCase::NonConcave_Tau1p_vs_Tau3
                                                  : ThroughputCase::NonConcave_Tau1_vs_1;
    return res;
}

double mrt_rate(double G_hat, double G_check, const EffectiveCoeffs& bar, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw DomainError("mrt_rate: epsilon must lie in (0, 1]");
    const double G = G_hat + G_check;
    if (!(G > 0.0))
        return 0.0;
    const double L = -std::log(epsilon);
    const double num = (G_check + G_hat * (1.0 + bar.c_bar * L)) * ((bar.e_bar + bar.d_bar) * G + 1.0);
    const double den = (bar.e_bar * G + 1.0) * (G_check + G_hat * (1.0 + (bar.c_bar + bar.a_bar) * L));
    return std::log2(num / den);
}

double mrt_rate_direct(const EffectiveCoeffs& coeffs, double epsilon)
{
    const double k = k_max_tau1(coeffs.a, coeffs.c, epsilon);
    return (std::log1p(coeffs.d / (coeffs.e + 1.0)) - std::log1p(k)) * kInvLn2;
}

double mrt_transmit_threshold(double G_hat, const EffectiveCoeffs& bar, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw DomainError("mrt_transmit_threshold: epsilon must lie in (0, 1]");
    if (!(bar.d_bar > 0.0))
        throw DomainError("mrt_transmit_threshold: destination SNR scale must be positive");
    const double L = -std::log(epsilon);
    const double s = bar.c_bar * L;
    const double t = bar.a_bar * L;
    // G^2 + a1 G + a2 >= 0 with a2 <= 0, so the discriminant is never negative
    const double a1 = G_hat * (s - t * bar.e_bar / bar.d_bar);
    const double a2 = -(t / bar.d_bar) * G_hat;
    const double root = std::sqrt(a1 * a1 - 4.0 * a2);
    const double g_plus = a1 >= 0.0 ? (root == 0.0 ? 0.0 : -2.0 * a2 / (a1 + root)) : 0.5 * (-a1 + root);
    return g_plus - G_hat;
}

double mrt_inner_closed_form(double G_hat, int n_dc, const EffectiveCoeffs& bar, double epsilon)
{
    if (n_dc < 1)
        throw DomainError("mrt_inner_closed_form: N_{D-C} must be at least 1");
    const double y = G_hat;
    const double L = -std::log(epsilon);
    const double beta = std::max(0.0, mrt_transmit_threshold(y, bar, epsilon));
    const double A1 = beta + y * (1.0 + bar.c_bar * L);
    const double A3 = beta + y * (1.0 + (bar.c_bar + bar.a_bar) * L);
    if (!(A1 > 0.0))
        return 0.0;
    const double ed = bar.e_bar + bar.d_bar;
    const double q1 = 1.0 / A1;
    const double q3 = 1.0 / A3;
    const double q2 = ed / (ed * (beta + y) + 1.0);
    const double q4 = bar.e_bar / (bar.e_bar * (beta + y) + 1.0);
    const double ln_r5 = std::log(A1) + std::log1p(ed * (beta + y)) - std::log(A3) - std::log1p(bar.e_bar * (beta + y));

    const int n1 = n_dc - 1;
    double sum = 0.0;
    for (int m = 0; m <= n1; ++m)
    {
        const double weight = (m == n1 ? 1.0 : std::pow(beta, n1 - m)) / (factorial(m) * factorial(n1 - m));
        if (weight == 0.0)
            continue;
        const double kernel = log_moment(m, q1) + log_moment(m, q2) - log_moment(m, q3) - log_moment(m, q4) +
                              factorial(m) * ln_r5;
        sum += weight * kernel;
    }
    return std::exp(-beta) * sum * kInvLn2;
}

double mrt_throughput(const SystemConfig& cfg, const QuadratureSpec& spec)
{
    check_mrt_config(cfg);
    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    const int n = cfg.n_dc();
    if (cfg.N_C == 0)
        return no_leakage_throughput(n, bar, spec);
    return outer_integral(cfg, bar, spec, [&](double y) { return mrt_inner_closed_form(y, n, bar, cfg.epsilon); });
}

double mrt_throughput_direct(const SystemConfig& cfg, const QuadratureSpec& spec)
{
    check_mrt_config(cfg);
    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    const int n = cfg.n_dc();
    if (cfg.N_C == 0)
        return no_leakage_throughput(n, bar, spec);
    const double x_cap = gamma_cap(n, spec.tail_mass);
    return outer_integral(cfg, bar, spec, [&](double y) {
        const double beta = std::max(0.0, mrt_transmit_threshold(y, bar, cfg.epsilon));
        auto g = [&](double x) { return gamma_pdf(n, x) * mrt_rate(y, x, bar, cfg.epsilon); };
        if (beta == 0.0)
            return integrate(g, 0.0, x_cap, spec, "mrt_throughput_direct");
        // truncate relative to the mass above the threshold, which may itself be far in the tail
        const double above = boost::math::gamma_q(static_cast<double>(n), beta);
        if (!(above > 0.0))
            return 0.0;
        const double hi = std::max(beta, gamma_cap(n, std::max(spec.tail_mass * above, 1e-300)));
        return integrate(g, beta, hi, spec, "mrt_throughput_direct");
    });
}

std::string_view to_string(PowerScheme s)
{
    switch (s)
    {
    case PowerScheme::Opa:
        return "opa";
    case PowerScheme::EqualPower:
        return "equal_power";
    case PowerScheme::Mrt:
        return "mrt";
    }
    return "?";
}

namespace
{

struct RateTau
{
    double rate = 0.0;
    double tau = 0.0;
};

// Mean per-draw rate over fixed-size trial blocks; block i always uses
// substream i, and block sums are reduced in block order.
template <class PerDraw>
ThroughputAverage average_rates(const SystemConfig& cfg, std::int64_t trials, std::uint64_t seed, unsigned threads,
                                PerDraw&& per_draw)
{
    if (trials < 1)
        throw DomainError("avg_throughput: trials must be at least 1");
    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    const int n_c = cfg.N_C;
    const int n_dc = cfg.n_dc();
    const int n_ec = cfg.n_ec();
    const RngStream root(seed, kThroughputStream);

    struct Partial
    {
        double sum = 0.0, sum2 = 0.0, tau = 0.0, tau2 = 0.0;
        std::int64_t sent = 0;
    };
    const std::int64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
    std::vector<Partial> parts(static_cast<std::size_t>(blocks));

    parallel_for(
        static_cast<std::size_t>(blocks),
        [&](std::size_t blk) {
            RngStream rng = root.substream(blk);
            const std::int64_t begin = static_cast<std::int64_t>(blk) * kBlockSize;
            const std::int64_t end = std::min(trials, begin + kBlockSize);
            Partial p;
            for (std::int64_t i = begin; i < end; ++i)
            {
                const ChannelDraw draw = sample_channel(n_c, n_dc, n_ec, rng);
                const EffectiveCoeffs c = scale_coeffs(bar, draw.G_hat, draw.G_check);
                const RateTau r = per_draw(c, draw, n_ec);
                if (r.rate > 0.0)
                {
                    p.sum += r.rate;
                    p.sum2 += r.rate * r.rate;
                    p.tau += r.tau;
                    p.tau2 += r.tau * r.tau;
                    ++p.sent;
                }
            }
            parts[blk] = p;
        },
        threads);

    Partial tot;
    for (const auto& p : parts)
    {
        tot.sum += p.sum;
        tot.sum2 += p.sum2;
        tot.tau += p.tau;
        tot.tau2 += p.tau2;
        tot.sent += p.sent;
    }
    ThroughputAverage out;
    const double n = static_cast<double>(trials);
    out.n = trials;
    out.value = tot.sum / n;
    const double var = trials > 1 ? std::max(0.0, (tot.sum2 - n * out.value * out.value) / (n - 1.0)) : 0.0;
    out.std_error = std::sqrt(var / n);
    out.transmit_fraction = static_cast<double>(tot.sent) / n;
    if (tot.sent > 0)
    {
        const double m = static_cast<double>(tot.sent);
        out.tau_star_mean = tot.tau / m;
        const double tvar =
            tot.sent > 1 ? std::max(0.0, (tot.tau2 - m * out.tau_star_mean * out.tau_star_mean) / (m - 1.0)) : 0.0;
        out.tau_star_se = std::sqrt(tvar / m);
    }
    return out;
}

// k(tau) by a bracketing solver of its own (TOMS 748), for reference values.
double reference_k(double tau, const EffectiveCoeffs& c, double epsilon, int n_ec)
{
    const double L = -std::log(epsilon);
    if (c.a == 0.0 || L == 0.0)
        return 0.0;
    const double hi = (c.c * tau * L < 1.0) ? c.a * L : c.a / (c.c * tau);
    auto f = [&](double k) {
        const double w = c.a - c.c * tau * k;
        if (w <= 0.0)
            return -L;
        return L - k / w - n_ec * std::log1p((1.0 - tau) * c.b * k / w);
    };
    const double f_hi = f(hi);
    if (f_hi >= 0.0)
        return hi;
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, 0.0, hi, L, f_hi, boost::math::tools::eps_tolerance<double>(50),
                                                     iters);
    return 0.5 * (r.first + r.second);
}

// log2((1 + Y_D) / (1 + tau k)) written through the SNDR.
double reference_rate(double tau, const EffectiveCoeffs& c, double epsilon, int n_ec)
{
    const double k = reference_k(tau, c, epsilon, n_ec);
    const double y_D = tau * c.d / (tau * c.e + 1.0);
    return std::log2((1.0 + y_D) / (1.0 + tau * k));
}

} // namespace

ThroughputAverage avg_throughput(const SystemConfig& cfg, PowerScheme scheme, std::int64_t trials, std::uint64_t seed,
                                 unsigned threads)
{
    ThroughputOptions opt;
    opt.concavity_points = 0;
    const double eps = cfg.epsilon;
    return average_rates(cfg, trials, seed, threads, [&](const EffectiveCoeffs& c, const ChannelDraw&, int n_ec) {
        switch (scheme)
        {
        case PowerScheme::Opa: {
            const ThroughputResult r = optimize_tau_throughput(c, KTauSolver::from(c, eps, n_ec), opt);
            return RateTau{r.R_s_star, r.tau_star};
        }
        case PowerScheme::EqualPower:
            return RateTau{rs_at(0.5, c, KTauSolver::from(c, eps, n_ec)), 0.5};
        case PowerScheme::Mrt:
            break;
        }
        return RateTau{mrt_rate_direct(c, eps), 1.0};
    });
}

ThroughputAverage avg_throughput_reference(const SystemConfig& cfg, PowerScheme scheme, std::int64_t trials,
                                           std::uint64_t seed, int grid_points, unsigned threads)
{
    if (grid_points < 2)
        throw DomainError("avg_throughput_reference: need at least 2 grid points");
    std::vector<double> grid;
    if (scheme == PowerScheme::Opa)
    {
        // dense near zero, where high-SNR optima sit
        const int n_log = grid_points / 4;
        const int n_lin = grid_points - n_log;
        for (int i = 0; i < n_log; ++i)
            grid.push_back(std::pow(10.0, -5.0 + (std::log10(0.05) + 5.0) * i / n_log));
        for (int i = 0; i < n_lin; ++i)
            grid.push_back(0.05 + 0.95 * i / (n_lin - 1));
    }
    const double eps = cfg.epsilon;
    const EffectiveCoeffs bar = derive_bar_coeffs(cfg);
    return average_rates(cfg, trials, seed, threads, [&](const EffectiveCoeffs& c, const ChannelDraw& draw, int n_ec) {
        switch (scheme)
        {
        case PowerScheme::Opa: {
            RateTau best{0.0, 0.0};
            for (double tau : grid)
            {
                const double r = reference_rate(tau, c, eps, n_ec);
                if (r > best.rate)
                    best = {r, tau};
            }
            return best;
        }
        case PowerScheme::EqualPower:
            return RateTau{reference_rate(0.5, c, eps, n_ec), 0.5};
        case PowerScheme::Mrt:
            break;
        }
        return RateTau{mrt_rate(draw.G_hat, draw.G_check, bar, eps), 1.0};
    });
}

std::pair<double, double> high_snr_k_and_rate(double tau, const EffectiveCoeffs& coeffs, double epsilon, int n_ec)
{
    if (!(tau > 0.0 && tau < 1.0))
        throw DomainError("high_snr_k_and_rate: tau must lie in (0, 1)");
    if (!(coeffs.k_tot2 > 0.0))
        throw DomainError("high_snr_k_and_rate: needs impaired hardware (k_tot^2 > 0)");
    if (!(epsilon > 0.0 && epsilon <= 1.0) || n_ec < 1)
        throw DomainError("high_snr_k_and_rate: invalid epsilon or N_{E-C}");
    const double R = std::expm1(-std::log(epsilon) / n_ec);
    const double denom = (1.0 - tau) * coeffs.b + R * coeffs.c * tau;
    const double k_inf = denom > 0.0 ? R * coeffs.a / denom : 0.0;
    if (coeffs.c > 0.0 && coeffs.c * tau * k_inf >= coeffs.a && coeffs.a > 0.0)
        throw InfeasibleError("high_snr_k_and_rate: k_inf reaches 1 / (tau k_tx^2)");
    const double rs = (std::log1p(1.0 / coeffs.k_tot2) - std::log1p(tau * k_inf)) * kInvLn2;
    return {k_inf, rs};
}

} // namespace mmwsec
