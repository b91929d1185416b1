// Copyright 2026 The Authors.
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

// One experiment = one instance, one algorithm, one order policy.
//
// Exact mode reports E[Alg] / Opt computed by enumeration. Monte Carlo mode
// additionally writes one CSV row per trial with the columns
//
//   trial, seed, order_tag, alg_value, prophet_value, ratio,
//   accepted_edges, degenerate
//
// where `seed` is the derived per-trial stream seed, `accepted_edges` is a
// ';'-separated list of element labels (or indices), and a trial whose
// prophet value is 0 reports ratio 1 with degenerate = 1.

#ifndef PROPHET_EXPERIMENT_HPP_
#define PROPHET_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "prophet/algorithms.hpp"
#include "prophet/simulation.hpp"

namespace prophet {

enum class RunMode { kExact, kMonteCarlo };

RunMode parse_run_mode(const std::string& name);

/// How the ex-ante reduction is computed. kAuto enumerates when the
/// product support fits the cap and samples otherwise.
enum class ReductionChoice { kAuto, kExact, kMonteCarlo };

struct ExperimentConfig {
  std::filesystem::path instance;
  Algorithm algorithm = Algorithm::kGraphicRandomCut;
  BaselineMethod partition_method = BaselineMethod::kProbabilistic;
  RunMode mode = RunMode::kExact;
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;  // required in Monte Carlo mode
  /// "worst-case", "random", or "explicit:i,j,k,...".
  std::string order = "worst-case";
  /// Output prefix; writes <out>.summary.json and, in MC mode, <out>.csv.
  /// Empty means no files.
  std::filesystem::path out;
  EnumerationCap cap;
  double confidence = 0.99;
  ReductionChoice reduction = ReductionChoice::kAuto;
  std::uint64_t reduction_trials = 100000;

  /// Throws ValidationError for inconsistent settings.
  void validate() const;
};

/// Parses an order spec against the reduced t-vector.
OrderPolicy parse_order_policy(const std::string& spec,
                               std::span<const double> reduced_t);

struct ExperimentResult {
  RatioSummary summary;
  nlohmann::json report;  // the content of <out>.summary.json
};

/// Derived seed for the reduction's own sampling, distinct from trial streams.
std::uint64_t reduction_seed(std::uint64_t seed);

ReductionOptions reduction_options(const ProphetInstance& inst,
                                   ReductionChoice choice, std::uint64_t trials,
                                   std::uint64_t seed, EnumerationCap cap);

/// Reduction diagnostics: p, t, the benchmark and, for graphic matroids,
/// the scaled vector and orientation.
nlohmann::json reduction_report(const BernoulliInstance& reduced);
nlohmann::json orientation_report(const GraphicPlan& plan);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace prophet

#endif  // PROPHET_EXPERIMENT_HPP_
