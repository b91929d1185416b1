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

#ifndef PROPHET_ALGORITHMS_HPP_
#define PROPHET_ALGORITHMS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "prophet/baselines.hpp"
#include "prophet/graphic_prophet.hpp"
#include "prophet/simulation.hpp"
#include "prophet/stochastic.hpp"

namespace prophet {

enum class Algorithm {
  kGraphicRandomCut,
  kGraphicDerandomized,
  kSamuelCahn,
  kKUniformProbabilistic,
  kKUniformOptFraction,
  kPartition,
};

std::string to_string(Algorithm a);
/// Parses the CLI spelling ("graphic-random-cut", "kuniform-prob", ...).
Algorithm parse_algorithm(std::string_view name);

/// Random-cut rule source: enumerates all 2^|V| cuts uniformly, or samples
/// one per trial.
class GraphicCutBuilder final : public RuleBuilder {
 public:
  GraphicCutBuilder(ProphetInstance inst, GraphicPlan plan)
      : inst_(std::move(inst)), plan_(std::move(plan)) {}

  std::string name() const override { return "graphic-random-cut"; }
  std::vector<WeightedRule> enumerate(EnumerationCap cap) const override;
  ThresholdRule sample(Rng& rng) const override;
  const GraphicPlan& plan() const { return plan_; }

 private:
  ProphetInstance inst_;
  GraphicPlan plan_;
};

/// Everything needed to evaluate one algorithm on one instance.
struct AlgorithmSetup {
  Algorithm algorithm;
  std::unique_ptr<RuleBuilder> builder;
  /// Ex-ante reduction used for the worst-case order (and, for the graphic
  /// algorithms, for the thresholds themselves).
  BernoulliInstance reduced;
  std::optional<GraphicPlan> graphic;
  std::optional<Cut> derandomized_cut;
  std::optional<UniformThreshold> uniform;  // single-threshold baselines
};

struct SetupOptions {
  ReductionOptions reduction;
  BaselineMethod partition_method = BaselineMethod::kProbabilistic;
  /// Prophet value for the Opt/(2k) baseline; computed exactly when unset.
  std::optional<double> opt;
};

AlgorithmSetup make_setup(const ProphetInstance& inst, Algorithm algorithm,
                          const SetupOptions& options = {});

/// Same, with a precomputed reduction in place of ex_ante_reduce.
AlgorithmSetup make_setup(const ProphetInstance& inst, Algorithm algorithm,
                          BernoulliInstance reduced, const SetupOptions& options = {});

}  // namespace prophet

#endif  // PROPHET_ALGORITHMS_HPP_
