// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The dofregion Authors
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


#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cctype>
#include <sstream>

#include "dofregion/capacity.hpp"
#include "dofregion/cli.hpp"
#include "dofregion/region.hpp"
#include "dofregion/verify.hpp"
#include "dofregion/version.hpp"

namespace py = pybind11;
using namespace dofregion;

namespace
{

FadingLaw law_from(const std::string& spec, int coherence_t)
{
    return FadingLaw::parse(spec, coherence_t);
}

py::tuple as_tuple(DofPair p)
{
    return py::make_tuple(p.d1, p.d2);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Degree-of-freedom regions of two-user MIMO interference channels without CSIT";
    m.attr("__version__") = version;

    py::class_<AntennaConfig>(m, "AntennaConfig")
        .def(py::init([](int m1, int n1, int m2, int n2) {
                 AntennaConfig c{m1, n1, m2, n2};
                 c.validate();
                 return c;
             }),
             py::arg("m1"), py::arg("n1"), py::arg("m2"), py::arg("n2"))
        .def_readonly("m1", &AntennaConfig::m1)
        .def_readonly("n1", &AntennaConfig::n1)
        .def_readonly("m2", &AntennaConfig::m2)
        .def_readonly("n2", &AntennaConfig::n2)
        .def("mirrored", &AntennaConfig::mirrored)
        .def(py::self == py::self)
        .def("__repr__", [](const AntennaConfig& c) { return "AntennaConfig(" + c.to_string() + ")"; });

    py::class_<HalfPlane>(m, "HalfPlane")
        .def_readonly("a1", &HalfPlane::a1)
        .def_readonly("a2", &HalfPlane::a2)
        .def_readonly("b", &HalfPlane::b)
        .def("__repr__", [](const HalfPlane& h) {
            std::ostringstream s;
            s << "HalfPlane(" << h.a1 << "*d1 + " << h.a2 << "*d2 <= " << h.b << ")";
            return s.str();
        });

    py::class_<DofRegion>(m, "DofRegion")
        .def_readonly("config", &DofRegion::config)
        .def_readonly("swapped", &DofRegion::swapped)
        .def_property_readonly("case", [](const DofRegion& r) { return std::string(to_string(r.case_label)); })
        .def_readonly("L", &DofRegion::l_value)
        .def_readonly("mu", &DofRegion::tradeoff_slope)
        .def_readonly("halfplanes", &DofRegion::halfplanes)
        .def_property_readonly("vertices",
                               [](const DofRegion& r) {
                                   py::list out;
                                   for (const DofPair& v : r.vertices)
                                       out.append(as_tuple(v));
                                   return out;
                               })
        .def("contains",
             [](const DofRegion& r, double d1, double d2, double tol) { return contains(r, {d1, d2}, tol); },
             py::arg("d1"), py::arg("d2"), py::arg("tol") = membership_tol)
        .def("distance", [](const DofRegion& r, double d1, double d2) { return distance_to_region(r, {d1, d2}); });

    m.def("compute_region", &compute_region, py::arg("config"));
    m.def("previous_outer_bound", &previous_outer_bound, py::arg("config"));
    m.def("tradeoff_slope", &tradeoff_slope, py::arg("config"));
    m.def("is_subset", &is_subset, py::arg("inner"), py::arg("outer"), py::arg("tol") = membership_tol);
    m.def("same_vertices", &same_vertices, py::arg("a"), py::arg("b"), py::arg("tol") = membership_tol);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("mean", &Estimate::mean)
        .def_readonly("std_err", &Estimate::std_err)
        .def_readonly("trials", &Estimate::trials)
        .def("__repr__", [](const Estimate& e) {
            std::ostringstream s;
            s << "Estimate(mean=" << e.mean << ", std_err=" << e.std_err << ", trials=" << e.trials << ")";
            return s.str();
        });

    m.def("c_star", &c_star, py::arg("m"), py::arg("n"));
    m.def("bpsk_awgn_mi", &bpsk_awgn_mi, py::arg("gamma"));
    m.def(
        "immse_check",
        [](double rho, double t, bool bpsk) {
            const ImmsePair p = bpsk ? immse_check_bpsk(rho, t) : immse_check(rho, t);
            return py::make_tuple(p.mi_direct, p.mi_integrated);
        },
        py::arg("rho"), py::arg("t"), py::arg("bpsk") = false, "Returns (direct, integrated) in nats.");

    m.def(
        "single_link_mi",
        [](const AntennaConfig& cfg, std::string link, double gamma, std::size_t trials, std::uint64_t seed,
           const std::string& law, int coherence_t) {
            for (char& ch : link)
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            for (Link l : all_links)
                if (link == link_name(l))
                {
                    py::gil_scoped_release release;
                    return ergodic_logdet_mi(RngStream(seed, 0), cfg, law_from(law, coherence_t), single_link(l),
                                             gamma, trials);
                }
            throw py::value_error("link must be one of H11, H12, H21, H22");
        },
        py::arg("config"), py::arg("link"), py::arg("gamma"), py::arg("trials") = 10000, py::arg("seed") = 1,
        py::arg("law") = "rayleigh", py::arg("coherence_t") = 1,
        "Per-symbol ergodic log-det MI (bits) of one link with white Gaussian input.");

    m.def(
        "sweep",
        [](const AntennaConfig& cfg, const std::vector<double>& gammas_db, std::size_t trials, std::uint64_t seed,
           const std::string& law, int coherence_t) {
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = sweep(RngStream(seed, 0), cfg, law_from(law, coherence_t), gammas_db, trials);
            }
            py::list out;
            for (const SweepRow& r : rows)
                out.append(py::make_tuple(r.gamma_db, r.quantity, r.value));
            return out;
        },
        py::arg("config"), py::arg("gammas_db"), py::arg("trials") = 10000, py::arg("seed") = 1,
        py::arg("law") = "rayleigh", py::arg("coherence_t") = 1,
        "List of (gamma_db, quantity, Estimate); matches the CLI sweep for the same seed.");

    py::class_<Check>(m, "Check")
        .def_readonly("description", &Check::description)
        .def_readonly("observed", &Check::observed)
        .def_readonly("bound_or_target", &Check::bound_or_target)
        .def_readonly("margin", &Check::margin)
        .def_readonly("passed", &Check::pass);

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("suite_name", &SuiteReport::suite_name)
        .def_readonly("checks", &SuiteReport::checks)
        .def_readonly("seed", &SuiteReport::seed)
        .def_readonly("trials", &SuiteReport::trials)
        .def_property_readonly("passed", &SuiteReport::passed)
        .def_property_readonly("failures", &SuiteReport::failures);

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, std::size_t trials) {
            py::gil_scoped_release release;
            return run_suite(name, seed, trials);
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("trials") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
