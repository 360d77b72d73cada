// Copyright 2026 The corrcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/error.hpp"
#include "corrcap/io.hpp"
#include "corrcap/locc.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/suites.hpp"
#include "corrcap/twoqubit.hpp"

namespace py = pybind11;
using namespace corrcap;

namespace {

std::vector<double> to_list(const ProbVector& p) {
  return {p.entries().begin(), p.entries().end()};
}

std::vector<ProbVector> to_set(const std::vector<std::vector<double>>& raw) {
  std::vector<ProbVector> out;
  for (const auto& r : raw) out.push_back(canonicalize(r));
  return out;
}

Dims dims_or_single(const CMatrix& m, Dims dims) {
  if (dims.empty()) dims.push_back(static_cast<std::size_t>(m.rows()));
  return dims;
}

py::dict report_dict(const CompositeReport& r) {
  // Reuse the JSON schema so Python and the CLI agree on field names.
  return py::module_::import("json").attr("loads")(io::report_to_json(r).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Majorization lattice and correlation capacity of composite quantum states";
  py::register_exception<Error>(m, "CorrcapError", PyExc_ValueError);

  m.def("canonicalize", [](const std::vector<double>& v) { return to_list(canonicalize(v)); },
        py::arg("probs"));
  m.def(
      "compare",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return std::string(to_string(compare(canonicalize(a), canonicalize(b))));
      },
      py::arg("a"), py::arg("b"), "MAJORIZED_BY means a is majorized by b.");
  m.def(
      "infimum", [](const std::vector<std::vector<double>>& s) { return to_list(infimum(to_set(s))); },
      py::arg("distributions"));
  m.def(
      "supremum",
      [](const std::vector<std::vector<double>>& s) { return to_list(supremum(to_set(s))); },
      py::arg("distributions"));
  m.def(
      "shannon_entropy",
      [](const std::vector<double>& v) { return shannon_entropy(canonicalize(v)); },
      py::arg("probs"), "Entropy in bits.");

  m.def(
      "analyze",
      [](const CMatrix& rho, const Dims& dims) {
        return report_dict(analyze(validate(rho, dims_or_single(rho, dims))));
      },
      py::arg("rho"), py::arg("dims") = Dims{});
  m.def(
      "correlation_information",
      [](const CMatrix& rho, const Dims& dims) {
        return correlation_information(validate(rho, dims_or_single(rho, dims)));
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "build_optimal_separable",
      [](const std::vector<CMatrix>& marginals) {
        std::vector<DensityMatrix> ms;
        for (const auto& x : marginals) ms.push_back(validate(x, {static_cast<std::size_t>(x.rows())}));
        const auto built = build_optimal_separable(ms);
        return py::make_tuple(built.state.matrix(), built.state.dims(), report_dict(analyze(built)));
      },
      py::arg("marginals"), "Returns (matrix, dims, report).");

  m.def(
      "two_qubit_state",
      [](double pa, double pb, const std::string& family) {
        const auto pair = QubitPair::make(pa, pb);
        if (family == "classical") return CMatrix(sigma_classical(pair).matrix());
        if (family == "separable") return CMatrix(sigma_separable(pair).matrix());
        if (family == "entangled") return CMatrix(sigma_entangled(pair).matrix());
        throw Error(ErrorCode::BadInput, "family must be classical, separable or entangled");
      },
      py::arg("p_a"), py::arg("p_b"), py::arg("family"));
  m.def(
      "fig1_curve",
      [](double pa, std::size_t steps) {
        std::vector<std::tuple<double, double, double, double>> rows;
        for (const auto& r : fig1_curve(pa, steps)) {
          rows.emplace_back(r.p_b, r.c_classical, r.c_separable, r.c_entangled);
        }
        return rows;
      },
      py::arg("p_a"), py::arg("steps") = kFig1DefaultSteps,
      "Rows (p_b, C_classical, C_separable, C_entangled).");
  m.def(
      "feline_correlations",
      [](std::size_t n, const std::vector<double>& spectrum) {
        const auto f = feline_state(n, canonicalize(spectrum));
        return py::make_tuple(correlation_information(f.pure), classical_correlation(f.decohered));
      },
      py::arg("n"), py::arg("spectrum"), "Returns (C(pure), C(decohered)) in bits.");

  m.def(
      "entropy_sum_minus_max",
      [](const CVector& v, const Dims& dims) { return entropy_sum_minus_max(PureState::normalized(v, dims)); },
      py::arg("psi"), py::arg("dims"));

  m.def("suite_names", [] {
    return std::vector<std::string>(suite_names().begin(), suite_names().end());
  });
  m.def(
      "run_suite",
      [](const std::string& name, std::size_t trials, std::uint64_t seed, bool parallel) {
        SuiteSummary s;
        {
          py::gil_scoped_release release;
          s = run_suite(name, trials, seed, parallel);
        }
        return py::module_::import("json").attr("loads")(io::summary_to_json(s).dump());
      },
      py::arg("suite"), py::arg("trials"), py::arg("seed") = 0, py::arg("parallel") = false);
}
