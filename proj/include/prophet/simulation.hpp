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

// Online execution of non-adaptive threshold rules.
//
// The gambler sees items in a fixed arrival order and accepts item i iff it
// passes its threshold (atom coins drawn upfront) and remains independent
// together with everything accepted so far. Thresholds are never read back
// or changed based on history.
//
// Exact expectations exploit that, for a fixed rule and order, the accepted
// set depends only on which items pass. Items pass independently, so the
// expectation is a sum over pass patterns of
//   Pr[pattern] * sum_{i accepted} E[X_i | i passes].

#ifndef PROPHET_SIMULATION_HPP_
#define PROPHET_SIMULATION_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prophet/common.hpp"
#include "prophet/stochastic.hpp"
#include "prophet/threshold_rule.hpp"

namespace prophet {

enum class OrderTag { kWorstCase, kRandom, kExplicit, kAdversarialSearch };

std::string to_string(OrderTag tag);

struct ArrivalOrder {
  std::vector<Element> permutation;
  OrderTag tag = OrderTag::kExplicit;

  /// Throws ValidationError unless `permutation` is a permutation of 0..n-1.
  void validate(int n) const;
};

struct TrialReport {
  ElementSet accepted;
  double alg_value = 0.0;
  double prophet_value = 0.0;
  ArrivalOrder order;
  std::uint64_t seed = 0;
  WeightVector realization;
  std::vector<double> coins;  // upfront atom coins, for replay
};

/// Runs one arrival sequence. `coins[i]` is item i's upfront atom coin in
/// [0, 1); it only matters when x_i sits exactly on its threshold.
TrialReport execute_online(const ProphetInstance& inst, const ThresholdRule& rule,
                           const ArrivalOrder& order,
                           std::span<const double> realization,
                           std::span<const double> coins);

/// Exact expected value of a fixed rule under a fixed order.
double expected_value_fixed(const ProphetInstance& inst, const ThresholdRule& rule,
                            const ArrivalOrder& order, EnumerationCap cap = {});

struct WeightedRule {
  double probability = 1.0;
  ThresholdRule rule;
};

/// Source of (possibly randomized) threshold rules. Randomness in the
/// builder (e.g. the cut) is resolved once per trial, before arrivals.
class RuleBuilder {
 public:
  virtual ~RuleBuilder() = default;
  virtual std::string name() const = 0;
  /// Every rule the builder can emit, with its probability.
  virtual std::vector<WeightedRule> enumerate(EnumerationCap cap) const = 0;
  virtual ThresholdRule sample(Rng& rng) const = 0;
};

/// Always emits the same rule.
class FixedRuleBuilder final : public RuleBuilder {
 public:
  FixedRuleBuilder(std::string name, ThresholdRule rule)
      : name_(std::move(name)), rule_(std::move(rule)) {}
  std::string name() const override { return name_; }
  std::vector<WeightedRule> enumerate(EnumerationCap) const override {
    return {{1.0, rule_}};
  }
  ThresholdRule sample(Rng&) const override { return rule_; }

 private:
  std::string name_;
  ThresholdRule rule_;
};

class OrderPolicy {
 public:
  /// Items by ascending reduced value t, ties by index.
  static OrderPolicy worst_case(std::span<const double> reduced_t);
  static OrderPolicy fixed(std::vector<Element> permutation,
                           OrderTag tag = OrderTag::kExplicit);
  /// A fresh uniform permutation per trial; exact mode averages over all n!.
  static OrderPolicy uniformly_random(int n);

  OrderTag tag() const { return order_.tag; }
  bool is_random() const { return random_; }
  int size() const { return n_; }

  ArrivalOrder draw(Rng& rng) const;
  std::vector<std::pair<double, ArrivalOrder>> enumerate(EnumerationCap cap) const;

 private:
  OrderPolicy(ArrivalOrder order, bool random, int n)
      : order_(std::move(order)), random_(random), n_(n) {}
  ArrivalOrder order_;
  bool random_ = false;
  int n_ = 0;
};

/// Exact expectation over builder randomness, orders, atom coins and
/// realizations.
double expected_value_exact(const ProphetInstance& inst, const RuleBuilder& builder,
                            const OrderPolicy& policy, EnumerationCap cap = {});

struct RatioSummary {
  double mean_alg = 0.0;
  double mean_prophet = 0.0;
  double ratio = 1.0;
  double half_width = 0.0;
  double confidence = 0.99;
  std::uint64_t trials = 0;
  bool degenerate = false;      // mean prophet value was 0; ratio set to 1
  bool low_sample = false;      // fewer than kRecommendedTrials
  static constexpr std::uint64_t kRecommendedTrials = 1000;
};

/// Two-sided normal quantile for the given confidence level.
double normal_critical_value(double confidence);

/// Ratio of means with a delta-method normal confidence interval. `sink`,
/// when set, sees every trial report in trial order.
RatioSummary monte_carlo_ratio(
    const ProphetInstance& inst, const RuleBuilder& builder,
    const OrderPolicy& policy, std::uint64_t trials, std::uint64_t seed,
    double confidence = 0.99,
    const std::function<void(std::uint64_t, const TrialReport&)>& sink = {});

enum class SearchMode { kExhaustive, kLocal };

/// Order minimizing expected_value_fixed. Exhaustive mode needs n <= 8.
/// Local mode descends by adjacent transpositions from `start` (identity
/// when empty).
std::pair<ArrivalOrder, double> adversarial_order_search(
    const ProphetInstance& inst, const ThresholdRule& rule, SearchMode mode,
    EnumerationCap cap = {}, std::vector<Element> start = {});

}  // namespace prophet

#endif  // PROPHET_SIMULATION_HPP_
