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

#include "corrcap/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "corrcap/error.hpp"

namespace corrcap::io {

namespace {

constexpr double kSnapToZero = 1e-13;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::BadInput, what);
}

std::vector<double> numbers(const json& arr, const char* what) {
  if (!arr.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& x : arr) {
    if (!x.is_number()) malformed(std::string(what) + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Dims parse_dims(const json& arr) {
  if (!arr.is_array() || arr.empty()) malformed("dims must be a non-empty array");
  Dims dims;
  for (const auto& d : arr) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
      malformed("dims must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

json spectrum_json(const ProbVector& p) {
  json arr = json::array();
  for (double x : p.entries()) arr.push_back(quantity(x));
  return arr;
}

std::string format9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", quantity(x));
  return buf;
}

}  // namespace

double round9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

double quantity(double x) { return std::abs(x) < kSnapToZero ? 0.0 : round9(x); }

ProbVector distribution_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("probs")) malformed("expected {\"probs\": [...]}");
  return canonicalize(numbers(doc.at("probs"), "probs"));
}

json distribution_to_json(const ProbVector& p, bool rounded) {
  if (rounded) return json{{"probs", spectrum_json(p)}};
  return json{{"probs", std::vector<double>(p.entries().begin(), p.entries().end())}};
}

DensityMatrix state_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    malformed("expected {\"dims\": [...], \"matrix\": [...]}");
  }
  Dims dims = parse_dims(doc.at("dims"));
  const json& rows = doc.at("matrix");
  if (!rows.is_array() || rows.empty()) malformed("matrix must be a non-empty array");
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      malformed("matrix must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto pair = numbers(row[static_cast<std::size_t>(j)], "matrix entry");
      if (pair.size() != 2) malformed("matrix entries must be [re, im] pairs");
      m(i, j) = cplx(pair[0], pair[1]);
    }
  }
  return validate(m, std::move(dims));
}

json state_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  const CMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"dims", rho.dims()}, {"matrix", std::move(rows)}};
}

PureState pure_state_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("vector")) {
    malformed("expected {\"dims\": [...], \"vector\": [...]}");
  }
  const Dims dims = parse_dims(doc.at("dims"));
  const json& amps = doc.at("vector");
  if (!amps.is_array() || amps.size() != total_dim(dims)) {
    malformed("vector length does not match dims");
  }
  CVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto pair = numbers(amps[i], "vector entry");
    if (pair.size() != 2) malformed("vector entries must be [re, im] pairs");
    v(static_cast<Eigen::Index>(i)) = cplx(pair[0], pair[1]);
  }
  return PureState::normalized(std::move(v), dims);
}

std::vector<DensityMatrix> marginals_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("marginals") || !doc.at("marginals").is_array()) {
    malformed("expected {\"marginals\": [...]}");
  }
  std::vector<DensityMatrix> out;
  for (const auto& s : doc.at("marginals")) out.push_back(state_from_json(s));
  return out;
}

json marginals_to_json(std::span<const DensityMatrix> marginals) {
  json arr = json::array();
  for (const auto& m : marginals) arr.push_back(state_to_json(m));
  return json{{"marginals", std::move(arr)}};
}

json report_to_json(const CompositeReport& report) {
  json margs = json::array();
  for (const auto& m : report.marginal_spectra) margs.push_back(spectrum_json(m));
  json out{{"spectrum", spectrum_json(report.spectrum)},
           {"marginal_spectra", std::move(margs)},
           {"entropy_bits", quantity(shannon_entropy(report.spectrum))},
           {"correlation_bits", quantity(report.correlation_bits)},
           {"is_classical", report.is_classical}};
  std::string label = report.is_classical ? "classical" : "quantum";
  if (report.two_qubit_ppt.has_value()) {
    out["ppt"] = *report.two_qubit_ppt;
    if (!*report.two_qubit_ppt) label = "entangled";
  }
  out["classification"] = label;
  if (report.gram_offdiag_max.has_value()) {
    out["gram_offdiag_max"] = round9(*report.gram_offdiag_max);
  }
  return out;
}

json summary_to_json(const SuiteSummary& summary) {
  json metrics = json::object();
  for (const auto& [name, value] : summary.metrics) metrics[name] = round9(value);
  return json{{"suite", summary.suite},
              {"trials", summary.trials},
              {"seed", summary.seed},
              {"failures", summary.failures},
              {"max_violation", round9(summary.max_violation)},
              {"metrics", std::move(metrics)}};
}

json monotonicity_to_json(const MonotonicityReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        json{{"trial", v.trial}, {"party", v.party}, {"margin", round9(v.margin)}});
  }
  return json{{"trials", report.trials},
              {"seed", report.seed},
              {"max_violation", round9(report.max_violation)},
              {"mean_margin", round9(report.mean_margin)},
              {"violations", std::move(violations)},
              {"entropy_max_violation", round9(report.entropy_max_violation)},
              {"capacity_max_violation", round9(report.capacity_max_violation)},
              {"capacity_violations", report.capacity_violations},
              {"identity_max_gap", round9(report.identity_max_gap)}};
}

void write_fig1_csv(std::ostream& os, std::span<const Fig1Row> rows) {
  os << "p_b,C_classical,C_separable,C_entangled\n";
  for (const auto& r : rows) {
    os << format9(r.p_b) << ',' << format9(r.c_classical) << ',' << format9(r.c_separable)
       << ',' << format9(r.c_entangled) << '\n';
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) malformed("cannot write " + path.string());
  out << text;
}

}  // namespace corrcap::io
