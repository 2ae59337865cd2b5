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
// Python bindings for the core library.

#include "mmwsec/channel.hpp"
#include "mmwsec/config.hpp"
#include "mmwsec/error.hpp"
#include "mmwsec/montecarlo.hpp"
#include "mmwsec/opa_sop.hpp"
#include "mmwsec/rng.hpp"
#include "mmwsec/sndr.hpp"
#include "mmwsec/sop.hpp"
#include "mmwsec/special.hpp"
#include "mmwsec/sweep.hpp"
#include "mmwsec/throughput.hpp"
#include "mmwsec/validation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mmwsec;

namespace
{

py::dict row_to_dict(const SweepRow& r)
{
    py::dict d;
    d["series"] = r.series;
    d["swept_key"] = r.key;
    d["swept_value"] = r.value;
    d["scheme"] = r.scheme;
    d["metric"] = r.metric;
    d["analytic"] = r.analytic;
    d["analytic_se"] = r.analytic_se;
    d["oracle"] = r.oracle;
    d["oracle_se"] = r.oracle_se;
    d["oracle_kind"] = r.oracle_kind;
    d["tau_star"] = r.tau_star;
    d["accept_rate"] = r.accept_rate;
    d["tag"] = r.tag;
    d["tol"] = r.tol;
    d["pass"] = r.within_tolerance();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Secrecy analysis for AN-masked mm-Wave beamforming with impaired hardware";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<DegenerateChannelError>(m, "DegenerateChannelError", PyExc_RuntimeError);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def(py::init([](py::kwargs kw) {
            SystemConfig cfg;
            for (auto item : kw)
                set_config_value(cfg, py::str(item.first), py::str(item.second));
            cfg.validate();
            return cfg;
        }))
        .def_readwrite("M", &SystemConfig::M)
        .def_readwrite("N_D", &SystemConfig::N_D)
        .def_readwrite("N_E", &SystemConfig::N_E)
        .def_readwrite("N_C", &SystemConfig::N_C)
        .def_readwrite("P_dBm", &SystemConfig::P_dBm)
        .def_readwrite("sigma_n2_dBm", &SystemConfig::sigma_n2_dBm)
        .def_readwrite("k_tx", &SystemConfig::k_tx)
        .def_readwrite("k_rx", &SystemConfig::k_rx)
        .def_readwrite("d_D_m", &SystemConfig::d_D_m)
        .def_readwrite("d_E_m", &SystemConfig::d_E_m)
        .def_readwrite("pl_a", &SystemConfig::pl_a)
        .def_readwrite("pl_b", &SystemConfig::pl_b)
        .def_readwrite("R_s", &SystemConfig::R_s)
        .def_readwrite("epsilon", &SystemConfig::epsilon)
        .def_property_readonly("n_dc", &SystemConfig::n_dc)
        .def_property_readonly("n_ec", &SystemConfig::n_ec)
        .def("validate", &SystemConfig::validate)
        .def("__repr__", [](const SystemConfig& c) {
            std::ostringstream os;
            write_config(os, c);
            return os.str();
        });

    py::class_<EffectiveCoeffs>(m, "EffectiveCoeffs")
        .def(py::init<>())
        .def_readwrite("beta_D", &EffectiveCoeffs::beta_D)
        .def_readwrite("beta_E", &EffectiveCoeffs::beta_E)
        .def_readwrite("k_tx2", &EffectiveCoeffs::k_tx2)
        .def_readwrite("k_tot2", &EffectiveCoeffs::k_tot2)
        .def_readwrite("a", &EffectiveCoeffs::a)
        .def_readwrite("b", &EffectiveCoeffs::b)
        .def_readwrite("c", &EffectiveCoeffs::c)
        .def_readwrite("d", &EffectiveCoeffs::d)
        .def_readwrite("e", &EffectiveCoeffs::e)
        .def_readwrite("a_bar", &EffectiveCoeffs::a_bar)
        .def_readwrite("c_bar", &EffectiveCoeffs::c_bar)
        .def_readwrite("d_bar", &EffectiveCoeffs::d_bar)
        .def_readwrite("e_bar", &EffectiveCoeffs::e_bar);

    m.def("derive_coeffs", py::overload_cast<const SystemConfig&, double, double>(&derive_coeffs), py::arg("config"),
          py::arg("G_hat"), py::arg("G_check"));
    m.def("derive_bar_coeffs", &derive_bar_coeffs, py::arg("config"));

    py::class_<ChannelDraw>(m, "ChannelDraw")
        .def_readonly("G_hat", &ChannelDraw::G_hat)
        .def_readonly("G_check", &ChannelDraw::G_check)
        .def_readonly("G", &ChannelDraw::G)
        .def_readonly("u", &ChannelDraw::u)
        .def_readonly("v", &ChannelDraw::v);
    m.def(
        "sample_channel",
        [](const SystemConfig& cfg, std::uint64_t seed, int count) {
            RngStream rng(seed);
            std::vector<ChannelDraw> out;
            out.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i)
                out.push_back(sample_channel(cfg.N_C, cfg.n_dc(), cfg.n_ec(), rng));
            return out;
        },
        py::arg("config"), py::arg("seed") = 1, py::arg("count") = 1);

    m.def("sndr_destination", &sndr_destination, py::arg("tau"), py::arg("coeffs"));
    m.def("sndr_eve", &sndr_eve, py::arg("tau"), py::arg("u"), py::arg("v"), py::arg("coeffs"));

    py::class_<SecrecyTarget>(m, "SecrecyTarget")
        .def(py::init(&SecrecyTarget::from_rate), py::arg("R_s"))
        .def_readonly("R_s", &SecrecyTarget::R_s)
        .def_readonly("T", &SecrecyTarget::T)
        .def_readonly("T_bar", &SecrecyTarget::T_bar);

    m.def("tau_min", &tau_min, py::arg("target"), py::arg("coeffs"));
    m.def("cdf_Y_E", &cdf_Y_E, py::arg("x"), py::arg("tau"), py::arg("coeffs"), py::arg("n_ec"));
    m.def("sop_conditional", &sop_conditional, py::arg("tau"), py::arg("target"), py::arg("coeffs"), py::arg("n_ec"));

    py::class_<SopBreakdown>(m, "SopBreakdown")
        .def_readonly("value", &SopBreakdown::value)
        .def_property_readonly("branch", [](const SopBreakdown& b) { return std::string(to_string(b.branch)); })
        .def_readonly("gamma1", &SopBreakdown::gamma1)
        .def_readonly("gamma2", &SopBreakdown::gamma2)
        .def_readonly("gamma3", &SopBreakdown::gamma3)
        .def_readonly("tau_min", &SopBreakdown::tau_min);
    m.def("sop_overall", &sop_overall, py::arg("tau"), py::arg("target"), py::arg("coeffs"), py::arg("n_ec"));

    py::class_<OpaResult>(m, "OpaResult")
        .def_readonly("tau_star", &OpaResult::tau_star)
        .def_property_readonly("case_tag", [](const OpaResult& r) { return std::string(to_string(r.case_tag)); })
        .def_readonly("objective_value", &OpaResult::objective_value)
        .def_readonly("tau_min", &OpaResult::tau_min);
    m.def("phi", &phi, py::arg("tau"), py::arg("u"), py::arg("v"), py::arg("coeffs"));
    m.def(
        "optimize_tau_sop",
        [](const SecrecyTarget& t, const EffectiveCoeffs& c, std::optional<double> u, std::optional<double> v,
           int n_ec) {
            const UvPolicy policy = (u && v) ? UvPolicy::oracle(*u, *v) : UvPolicy::mean(n_ec);
            return optimize_tau_sop(t, c, policy);
        },
        py::arg("target"), py::arg("coeffs"), py::arg("u") = py::none(), py::arg("v") = py::none(),
        py::arg("n_ec") = 1,
        "Maximise (1 + Y_D)/(1 + Y_E) over tau; with u and v omitted the means (1, n_ec) are substituted.");

    m.def("k_max_tau1", &k_max_tau1, py::arg("a"), py::arg("c"), py::arg("epsilon"));
    m.def(
        "solve_k",
        [](double tau, const EffectiveCoeffs& c, double epsilon, int n_ec) {
            return solve_k(tau, KTauSolver::from(c, epsilon, n_ec));
        },
        py::arg("tau"), py::arg("coeffs"), py::arg("epsilon"), py::arg("n_ec"));
    m.def("rs_of_tau", &rs_of_tau, py::arg("tau"), py::arg("k"), py::arg("coeffs"));

    py::class_<ThroughputResult>(m, "ThroughputResult")
        .def_readonly("tau_star", &ThroughputResult::tau_star)
        .def_readonly("R_s_star", &ThroughputResult::R_s_star)
        .def_property_readonly("case_tag", [](const ThroughputResult& r) { return std::string(to_string(r.case_tag)); })
        .def_readonly("transmit", &ThroughputResult::transmit);
    m.def(
        "optimize_tau_throughput",
        [](const EffectiveCoeffs& c, double epsilon, int n_ec) {
            return optimize_tau_throughput(c, KTauSolver::from(c, epsilon, n_ec));
        },
        py::arg("coeffs"), py::arg("epsilon"), py::arg("n_ec"));
    m.def("mrt_rate", &mrt_rate, py::arg("G_hat"), py::arg("G_check"), py::arg("bar_coeffs"), py::arg("epsilon"));
    m.def("mrt_transmit_threshold", &mrt_transmit_threshold, py::arg("G_hat"), py::arg("bar_coeffs"),
          py::arg("epsilon"));
    m.def(
        "mrt_throughput", [](const SystemConfig& cfg) { return mrt_throughput(cfg); }, py::arg("config"));
    m.def(
        "mrt_throughput_direct", [](const SystemConfig& cfg) { return mrt_throughput_direct(cfg); },
        py::arg("config"));
    m.def("high_snr_k_and_rate", &high_snr_k_and_rate, py::arg("tau"), py::arg("coeffs"), py::arg("epsilon"),
          py::arg("n_ec"));

    m.def("exp_integral_ei", &exp_integral_ei, py::arg("x"));
    m.def("log_moment", &log_moment, py::arg("m"), py::arg("q"));

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("n", &McEstimate::n)
        .def_readonly("seed", &McEstimate::seed);
    m.def(
        "empirical_conditional_sop",
        [](double tau, const SecrecyTarget& t, const EffectiveCoeffs& c, int n_ec, std::int64_t n, std::uint64_t seed) {
            py::gil_scoped_release release;
            return empirical_conditional_sop(tau, t, c, n_ec, n, seed);
        },
        py::arg("tau"), py::arg("target"), py::arg("coeffs"), py::arg("n_ec"), py::arg("n"), py::arg("seed") = 1);
    m.def(
        "empirical_cdf_Y_E",
        [](double tau, const EffectiveCoeffs& c, int n_ec, std::vector<double> grid, std::int64_t n,
           std::uint64_t seed) {
            py::gil_scoped_release release;
            return empirical_cdf_Y_E(tau, c, n_ec, grid, n, seed);
        },
        py::arg("tau"), py::arg("coeffs"), py::arg("n_ec"), py::arg("x_grid"), py::arg("n"), py::arg("seed") = 1);

    m.def(
        "avg_throughput",
        [](const SystemConfig& cfg, const std::string& scheme, std::int64_t trials, std::uint64_t seed) {
            PowerScheme s = PowerScheme::Opa;
            if (scheme == "equal_power")
                s = PowerScheme::EqualPower;
            else if (scheme == "mrt")
                s = PowerScheme::Mrt;
            else if (scheme != "opa")
                throw DomainError("unknown scheme '" + scheme + "' (opa, equal_power, mrt)");
            ThroughputAverage a;
            {
                py::gil_scoped_release release;
                a = avg_throughput(cfg, s, trials, seed);
            }
            return py::make_tuple(a.value, a.std_error, a.tau_star_mean);
        },
        py::arg("config"), py::arg("scheme") = "opa", py::arg("trials") = 1000, py::arg("seed") = 1,
        "Monte-Carlo throughput: (value, std_error, mean tau*).");

    m.def(
        "run_preset",
        [](const std::string& name, std::int64_t trials, std::uint64_t seed) {
            const SweepSpec spec = preset(name, trials, seed);
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_sweep(spec);
            }
            py::list out;
            for (const auto& r : rows)
                out.append(row_to_dict(r));
            return out;
        },
        py::arg("name"), py::arg("trials") = 0, py::arg("seed") = 1);

    m.def(
        "validate",
        [](std::uint64_t seed) {
            ValidationOptions o;
            o.seed = seed;
            std::vector<CheckResult> res;
            {
                py::gil_scoped_release release;
                res = run_validation(o);
            }
            py::list out;
            for (const auto& r : res)
                out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("seed") = 1);
}
