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

#include "prophet/algorithms.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace prophet {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kNames = {{
    {Algorithm::kGraphicRandomCut, "graphic-random-cut"},
    {Algorithm::kGraphicDerandomized, "graphic-derandomized"},
    {Algorithm::kSamuelCahn, "samuel-cahn"},
    {Algorithm::kKUniformProbabilistic, "kuniform-prob"},
    {Algorithm::kKUniformOptFraction, "kuniform-optfrac"},
    {Algorithm::kPartition, "partition"},
}};

}  // namespace

std::string to_string(Algorithm a) {
  for (const auto& [algo, name] : kNames) {
    if (algo == a) return std::string(name);
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [algo, spelled] : kNames) {
    if (spelled == name) return algo;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) + "'");
}

std::vector<WeightedRule> GraphicCutBuilder::enumerate(EnumerationCap cap) const {
  const int n = plan_.graph->vertices();
  if (n > 40) throw CapExceeded("cut enumeration limited to 40 vertices");
  cap.check(std::ldexp(1.0, n), "cut enumeration");
  const double prob = std::ldexp(1.0, -n);
  std::vector<WeightedRule> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back({prob, rule_for_cut(inst_, plan_, Cut::from_mask(n, mask))});
  }
  return out;
}

ThresholdRule GraphicCutBuilder::sample(Rng& rng) const {
  return rule_for_cut(inst_, plan_, sample_cut(*plan_.graph, rng));
}

AlgorithmSetup make_setup(const ProphetInstance& inst, Algorithm algorithm,
                          const SetupOptions& options) {
  return make_setup(inst, algorithm, ex_ante_reduce(inst, options.reduction), options);
}

AlgorithmSetup make_setup(const ProphetInstance& inst, Algorithm algorithm,
                          BernoulliInstance reduced, const SetupOptions& options) {
  if (reduced.size() != inst.size()) {
    throw ValidationError("reduction does not match the instance size");
  }
  AlgorithmSetup setup{algorithm, nullptr, reduced, std::nullopt, std::nullopt,
                       std::nullopt};
  const EnumerationCap cap = options.reduction.cap;
  switch (algorithm) {
    case Algorithm::kGraphicRandomCut: {
      GraphicPlan plan = plan_graphic(inst, reduced);
      setup.graphic = plan;
      setup.builder = std::make_unique<GraphicCutBuilder>(inst, std::move(plan));
      break;
    }
    case Algorithm::kGraphicDerandomized: {
      GraphicPlan plan = plan_graphic(inst, reduced);
      Cut cut = derandomize_cut(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                plan.orientation, cap);
      setup.builder = std::make_unique<FixedRuleBuilder>(
          to_string(algorithm), rule_for_cut(inst, plan, cut));
      setup.graphic = std::move(plan);
      setup.derandomized_cut = std::move(cut);
      break;
    }
    case Algorithm::kSamuelCahn:
    case Algorithm::kKUniformProbabilistic:
    case Algorithm::kKUniformOptFraction: {
      UniformThreshold t =
          algorithm == Algorithm::kSamuelCahn
              ? samuel_cahn_threshold(inst, cap)
          : algorithm == Algorithm::kKUniformProbabilistic
              ? kuniform_probabilistic_threshold(inst, cap)
              : kuniform_opt_fraction_threshold(inst, options.opt, cap);
      setup.builder = std::make_unique<FixedRuleBuilder>(
          to_string(algorithm), t.expand(inst.size()));
      setup.uniform = std::move(t);
      break;
    }
    case Algorithm::kPartition:
      setup.builder = std::make_unique<FixedRuleBuilder>(
          to_string(algorithm),
          partition_thresholds(inst, options.partition_method, cap));
      break;
  }
  return setup;
}

}  // namespace prophet
