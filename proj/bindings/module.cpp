// Copyright 2026 the qvbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qvb/clv.hpp"
#include "qvb/ffv.hpp"
#include "qvb/majorana.hpp"
#include "qvb/orthogonal.hpp"
#include "qvb/report.hpp"

namespace py = pybind11;
using namespace qvb;

PYBIND11_MODULE(_qvbench, m) {
    m.doc() = "Clifford and free-fermion volumetric benchmarks";
    m.attr("__version__") = kToolVersion;

    py::enum_<CountRule>(m, "CountRule")
        .value("MAIN", CountRule::MainText)
        .value("APPENDIX", CountRule::Appendix);
    py::enum_<SigmaAverageForm>(m, "SigmaAverageForm")
        .value("SEM", SigmaAverageForm::Sem)
        .value("RMS", SigmaAverageForm::Rms);
    py::enum_<SearchMode>(m, "SearchMode")
        .value("LINEAR", SearchMode::Linear)
        .value("BINARY_CONFIRM", SearchMode::BinaryConfirm);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init<size_t>(), py::arg("n"))
        .def_static("parse", &PauliString::parse)
        .def("__str__", &PauliString::str)
        .def("__len__", &PauliString::num_qubits)
        .def("weight", &PauliString::weight)
        .def("sign", &PauliString::sign)
        .def_static("multiply", &PauliString::multiply)
        .def_static("commutes", &PauliString::commutes);

    py::class_<CliffordTableau>(m, "CliffordTableau")
        .def_static(
            "random",
            [](size_t n, uint64_t seed) {
                Rng rng(seed);
                return CliffordTableau::random(n, rng);
            },
            py::arg("n"), py::arg("seed"))
        .def("num_qubits", &CliffordTableau::num_qubits)
        .def("stabilizer",
             [](const CliffordTableau& t, size_t i) { return t.stabilizer(i); })
        .def("destabilizer",
             [](const CliffordTableau& t, size_t i) { return t.destabilizer(i); })
        .def("synthesize", &CliffordTableau::synthesize)
        .def("noiseless_expectation", &CliffordTableau::noiseless_expectation);

    py::class_<CircuitMetrics>(m, "CircuitMetrics")
        .def_readonly("two_qubit_depth", &CircuitMetrics::two_qubit_depth)
        .def_readonly("two_qubit_count", &CircuitMetrics::two_qubit_count)
        .def_readonly("total_depth", &CircuitMetrics::total_depth)
        .def_readonly("total_count", &CircuitMetrics::total_count);

    py::class_<Circuit>(m, "Circuit")
        .def("num_gates", [](const Circuit& c) { return c.gates.size(); })
        .def_readonly("n_qubits", &Circuit::n_qubits)
        .def("metrics", &Circuit::metrics)
        .def("to_qasm", &Circuit::to_qasm);

    py::class_<GivensRotation>(m, "GivensRotation")
        .def_readonly("k", &GivensRotation::k)
        .def_readonly("angle", &GivensRotation::angle);

    py::class_<GivensProgram>(m, "GivensProgram")
        .def_readonly("dim", &GivensProgram::dim)
        .def_readonly("rotations", &GivensProgram::rotations)
        .def_readonly("signs", &GivensProgram::signs)
        .def("reconstruct", &GivensProgram::reconstruct);

    m.def(
        "sample_haar_so",
        [](size_t dim, uint64_t seed) {
            Rng rng(seed);
            return sample_haar_so(dim, rng);
        },
        py::arg("dim"), py::arg("seed"));
    m.def("is_special_orthogonal", &is_special_orthogonal, py::arg("o"), py::arg("tol") = 1e-10);
    m.def("givens_decompose", &givens_decompose, py::arg("o"), py::arg("tol") = 1e-10);
    m.def("lower_givens", &lower_givens);
    m.def("effective_evolution", &effective_evolution);
    m.def("measurement_count", &measurement_count, py::arg("n"),
          py::arg("rule") = CountRule::MainText);

    m.def(
        "run_clv",
        [](size_t n_max, double p2q, double pm, uint64_t shots, size_t k, uint64_t seed,
           SearchMode search, SigmaAverageForm sigma_avg) {
            ClvConfig cfg;
            cfg.k_cliffords = k;
            cfg.shots = shots;
            cfg.noise = {p2q, pm};
            cfg.seed = seed;
            cfg.search = search;
            cfg.sigma_avg = sigma_avg;
            ClvRunResult run = run_clv_search(cfg, n_max);
            py::dict out;
            out["score"] = run.score;
            out["report"] = render_json(clv_report(cfg, run));
            return out;
        },
        py::arg("n_max"), py::arg("p2q") = 0.0, py::arg("pm") = 0.0, py::arg("shots") = 512,
        py::arg("k") = 4, py::arg("seed") = 0, py::arg("search") = SearchMode::Linear,
        py::arg("sigma_avg") = SigmaAverageForm::Sem);

    m.def(
        "run_ffv",
        [](size_t n_max, double p2q, double pm, uint64_t shots, size_t k, uint64_t seed,
           SearchMode search, CountRule rule) {
            FfvConfig cfg;
            cfg.k_instances = k;
            cfg.shots = shots;
            cfg.noise = {p2q, pm};
            cfg.seed = seed;
            cfg.search = search;
            cfg.count_rule = rule;
            FfvRunResult run = run_ffv_search(cfg, n_max);
            py::dict out;
            out["score"] = run.score;
            out["report"] = render_json(ffv_report(cfg, run));
            return out;
        },
        py::arg("n_max"), py::arg("p2q") = 0.0, py::arg("pm") = 0.0, py::arg("shots") = 512,
        py::arg("k") = 4, py::arg("seed") = 0, py::arg("search") = SearchMode::Linear,
        py::arg("rule") = CountRule::MainText);

    m.def("replay_table", [](const std::string& table_json) {
        nlohmann::json table = nlohmann::json::parse(table_json);
        ClvConfig cfg;
        ClvVerdict v = replay_verdict(parse_replay_table(table), cfg);
        return v.pass;
    });
}
