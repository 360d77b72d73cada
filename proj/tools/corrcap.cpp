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

// corrcap command-line front end.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/error.hpp"
#include "corrcap/io.hpp"
#include "corrcap/locc.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/sampling.hpp"
#include "corrcap/suites.hpp"
#include "corrcap/twoqubit.hpp"

namespace {

using corrcap::io::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool deterministic = false;
};

void echo_config(const Globals& g, const std::string& command, json config) {
  config["command"] = command;
  if (!g.deterministic) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    config["timestamp"] = buf;
  }
  std::cerr << "# config " << config.dump() << '\n';
}

std::uint64_t env_seed() {
  const char* raw = std::getenv("CORRCAP_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw corrcap::Error(corrcap::ErrorCode::BadInput,
                         std::string("CORRCAP_SEED is not an unsigned integer: ") + raw);
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_state(const std::string& path, const corrcap::DensityMatrix& rho) {
  corrcap::io::write_text_file(path, corrcap::io::state_to_json(rho).dump(2) + "\n");
}

// ---- major -----------------------------------------------------------------

struct MajorArgs {
  std::string op;
  std::vector<std::string> files;
};

int run_major(const Globals& g, const MajorArgs& a) {
  echo_config(g, "major", {{"op", a.op}, {"files", a.files}});
  std::vector<corrcap::ProbVector> dists;
  for (const auto& f : a.files) {
    dists.push_back(corrcap::io::distribution_from_json(corrcap::io::read_json_file(f)));
  }
  if (a.op == "cmp") {
    if (dists.size() != 2) {
      throw corrcap::Error(corrcap::ErrorCode::BadInput, "major cmp takes exactly two files");
    }
    std::cout << corrcap::to_string(corrcap::compare(dists[0], dists[1])) << '\n';
    return kExitOk;
  }
  const corrcap::ProbVector r =
      a.op == "inf" ? corrcap::infimum(dists) : corrcap::supremum(dists);
  std::cout << corrcap::io::distribution_to_json(r).dump() << '\n';
  return kExitOk;
}

// ---- composite / state -----------------------------------------------------

struct CompositeArgs {
  std::string marginals;
  std::string out;
};

int run_composite(const Globals& g, const CompositeArgs& a) {
  echo_config(g, "composite build", {{"marginals", a.marginals}, {"out", a.out}});
  const auto margs =
      corrcap::io::marginals_from_json(corrcap::io::read_json_file(a.marginals));
  const corrcap::OptimalSeparable built = corrcap::build_optimal_separable(margs);
  if (!a.out.empty()) write_state(a.out, built.state);
  emit(corrcap::io::report_to_json(corrcap::analyze(built)));
  return kExitOk;
}

int run_analyze(const Globals& g, const std::string& file) {
  echo_config(g, "state analyze", {{"file", file}});
  const auto rho = corrcap::io::state_from_json(corrcap::io::read_json_file(file));
  emit(corrcap::io::report_to_json(corrcap::analyze(rho)));
  return kExitOk;
}

// ---- twoqubit --------------------------------------------------------------

struct TwoQubitArgs {
  double pa = 0.0;
  double pb = 0.0;
  std::string family;
  std::string out;
  std::size_t steps = corrcap::kFig1DefaultSteps;
  std::size_t n = 0;
  std::string spectrum;
};

int run_optimal(const Globals& g, const TwoQubitArgs& a) {
  echo_config(g, "twoqubit optimal",
              {{"pa", a.pa}, {"pb", a.pb}, {"family", a.family}, {"out", a.out}});
  const auto pair = corrcap::QubitPair::make(a.pa, a.pb);
  const corrcap::DensityMatrix rho = a.family == "classical" ? corrcap::sigma_classical(pair)
                                     : a.family == "separable"
                                         ? corrcap::sigma_separable(pair)
                                         : corrcap::sigma_entangled(pair);
  if (!a.out.empty()) write_state(a.out, rho);
  json report = corrcap::io::report_to_json(corrcap::analyze(rho));
  report["family"] = a.family;
  emit(report);
  return kExitOk;
}

int run_fig1(const Globals& g, const TwoQubitArgs& a) {
  echo_config(g, "twoqubit fig1", {{"pa", a.pa}, {"steps", a.steps}, {"out", a.out}});
  const auto rows = corrcap::fig1_curve(a.pa, a.steps);
  std::ostringstream csv;
  corrcap::io::write_fig1_csv(csv, rows);
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    corrcap::io::write_text_file(a.out, csv.str());
  }
  return kExitOk;
}

int run_feline(const Globals& g, const TwoQubitArgs& a) {
  echo_config(g, "twoqubit feline", {{"n", a.n}, {"spectrum", a.spectrum}});
  const corrcap::ProbVector spec =
      corrcap::io::distribution_from_json(corrcap::io::read_json_file(a.spectrum));
  const corrcap::FelineStates f = corrcap::feline_state(a.n, spec);
  const double h = corrcap::shannon_entropy(spec);
  emit(json{{"n", a.n},
            {"d", spec.size()},
            {"marginal_entropy_bits", corrcap::io::quantity(h)},
            {"c_pure", corrcap::io::quantity(corrcap::correlation_information(f.pure))},
            {"c_decohered", corrcap::io::quantity(corrcap::classical_correlation(f.decohered))}});
  return kExitOk;
}

// ---- verify / locc ---------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  bool parallel = false;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  const std::uint64_t seed = a.seed.value_or(env_seed());
  const std::size_t trials = a.trials.value_or(corrcap::default_trials(a.suite));
  echo_config(g, "verify",
              {{"suite", a.suite}, {"trials", trials}, {"seed", seed}, {"parallel", a.parallel}});
  const auto summary = corrcap::run_suite(a.suite, trials, seed, a.parallel);
  emit(corrcap::io::summary_to_json(summary));
  return summary.failures == 0 ? kExitOk : kExitPropertyFailure;
}

struct LoccArgs {
  std::vector<std::size_t> dims;
  std::string state;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  bool parallel = false;
};

int run_locc(const Globals& g, const LoccArgs& a) {
  const std::uint64_t seed = a.seed.value_or(env_seed());
  echo_config(g, "locc trial",
              {{"dims", a.dims}, {"state", a.state}, {"trials", a.trials}, {"seed", seed},
               {"parallel", a.parallel}});
  if (a.dims.empty() == a.state.empty()) {
    throw corrcap::Error(corrcap::ErrorCode::BadInput, "give exactly one of --dims or --state");
  }
  // The random input state uses a path no trial stream can reach.
  const corrcap::PureState psi =
      a.state.empty()
          ? corrcap::haar_pure(a.dims, corrcap::SeededStream(seed, {~std::uint64_t{0}}))
          : corrcap::io::pure_state_from_json(corrcap::io::read_json_file(a.state));
  const auto report = corrcap::monotonicity_trial(psi, a.trials, seed, a.parallel);
  emit(corrcap::io::monotonicity_to_json(report));
  return report.violations.empty() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization lattice, optimal separable composites and correlation capacity"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--deterministic", globals.deterministic,
               "Omit the timestamp from the configuration echo");

  MajorArgs major;
  auto* major_cmd = app.add_subcommand("major", "Majorization order, infimum, supremum");
  major_cmd->add_option("op", major.op, "cmp | inf | sup")
      ->required()
      ->check(CLI::IsMember({"cmp", "inf", "sup"}));
  major_cmd->add_option("files", major.files, "Distribution files {\"probs\": [...]}")
      ->required()
      ->check(CLI::ExistingFile);

  CompositeArgs composite;
  auto* composite_cmd = app.add_subcommand("composite", "Optimal separable composites");
  composite_cmd->require_subcommand(1);
  auto* build_cmd = composite_cmd->add_subcommand("build", "Build sigma(M) from marginals");
  build_cmd->add_option("marginals", composite.marginals, "Marginal-set file")
      ->required()
      ->check(CLI::ExistingFile);
  build_cmd->add_option("-o,--out", composite.out, "Write the state file here");

  std::string analyze_file;
  auto* state_cmd = app.add_subcommand("state", "Inspect a density matrix");
  state_cmd->require_subcommand(1);
  auto* analyze_cmd = state_cmd->add_subcommand("analyze", "Print a composite report");
  analyze_cmd->add_option("file", analyze_file, "State file")
      ->required()
      ->check(CLI::ExistingFile);

  TwoQubitArgs tq;
  auto* tq_cmd = app.add_subcommand("twoqubit", "Closed-form two-qubit composites");
  tq_cmd->require_subcommand(1);
  auto* optimal_cmd = tq_cmd->add_subcommand("optimal", "Least disordered composite");
  optimal_cmd->add_option("--pa", tq.pa, "Larger eigenvalue of marginal a")->required();
  optimal_cmd->add_option("--pb", tq.pb, "Larger eigenvalue of marginal b")->required();
  optimal_cmd->add_option("--family", tq.family, "classical | separable | entangled")
      ->required()
      ->check(CLI::IsMember({"classical", "separable", "entangled"}));
  optimal_cmd->add_option("-o,--out", tq.out, "Write the state file here");
  auto* fig1_cmd = tq_cmd->add_subcommand("fig1", "Correlation curves over p_b");
  fig1_cmd->add_option("--pa", tq.pa, "Fixed larger eigenvalue of marginal a")->required();
  fig1_cmd->add_option("--steps", tq.steps, "Grid points on [0.5, 1]")
      ->check(CLI::Range(2, 1000000));
  fig1_cmd->add_option("-o,--out", tq.out, "CSV path (stdout if omitted)");
  auto* feline_cmd = tq_cmd->add_subcommand("feline", "Generalized cat states");
  feline_cmd->add_option("--n", tq.n, "Number of parties")->required();
  feline_cmd->add_option("--spectrum", tq.spectrum, "Distribution file")
      ->required()
      ->check(CLI::ExistingFile);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
  std::vector<std::string> names(corrcap::suite_names().begin(), corrcap::suite_names().end());
  verify_cmd->add_option("--suite", verify.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(names));
  verify_cmd->add_option("--trials", verify.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Master seed (default: $CORRCAP_SEED or 0)");
  verify_cmd->add_flag("--parallel", verify.parallel, "Run trials on all cores");

  LoccArgs locc;
  auto* locc_cmd = app.add_subcommand("locc", "Local measurement experiments");
  locc_cmd->require_subcommand(1);
  auto* trial_cmd = locc_cmd->add_subcommand("trial", "Monotonicity of f under measurements");
  trial_cmd->add_option("--dims", locc.dims, "Subsystem dims of a Haar-random input state");
  trial_cmd->add_option("--state", locc.state, "Pure-state file {\"dims\", \"vector\"}")
      ->check(CLI::ExistingFile);
  trial_cmd->add_option("--trials", locc.trials, "Number of measurements")
      ->check(CLI::PositiveNumber);
  trial_cmd->add_option("--seed", locc.seed, "Master seed (default: $CORRCAP_SEED or 0)");
  trial_cmd->add_flag("--parallel", locc.parallel, "Run trials on all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*major_cmd) return run_major(globals, major);
    if (*build_cmd) return run_composite(globals, composite);
    if (*analyze_cmd) return run_analyze(globals, analyze_file);
    if (*optimal_cmd) return run_optimal(globals, tq);
    if (*fig1_cmd) return run_fig1(globals, tq);
    if (*feline_cmd) return run_feline(globals, tq);
    if (*verify_cmd) return run_verify(globals, verify);
    if (*trial_cmd) return run_locc(globals, locc);
  } catch (const corrcap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [BadInput]: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
