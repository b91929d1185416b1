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

#include "prophet/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

namespace prophet {

std::string to_string(OrderTag tag) {
  switch (tag) {
    case OrderTag::kWorstCase:
      return "worst-case";
    case OrderTag::kRandom:
      return "random";
    case OrderTag::kExplicit:
      return "explicit";
    case OrderTag::kAdversarialSearch:
      return "adversarial-search";
  }
  return "unknown";
}

void ArrivalOrder::validate(int n) const {
  if (static_cast<int>(permutation.size()) != n) {
    throw ValidationError("arrival order has " +
                          std::to_string(permutation.size()) +
                          " entries for " + std::to_string(n) + " items");
  }
  std::vector<bool> seen(n, false);
  for (Element e : permutation) {
    if (e < 0 || e >= n || seen[e]) {
      throw ValidationError("arrival order is not a permutation");
    }
    seen[e] = true;
  }
}

TrialReport execute_online(const ProphetInstance& inst, const ThresholdRule& rule,
                           const ArrivalOrder& order,
                           std::span<const double> realization,
                           std::span<const double> coins) {
  const int n = inst.size();
  order.validate(n);
  if (static_cast<int>(rule.size()) != n ||
      static_cast<int>(realization.size()) != n ||
      static_cast<int>(coins.size()) != n) {
    throw ValidationError("rule, realization and coins must cover every item");
  }
  TrialReport report;
  report.order = order;
  report.realization.assign(realization.begin(), realization.end());
  report.coins.assign(coins.begin(), coins.end());

  const Matroid& m = inst.matroid();
  for (Element i : order.permutation) {
    if (!rule.passes(i, realization[i], coins[i])) continue;
    ElementSet extended = report.accepted;
    extended.insert(std::upper_bound(extended.begin(), extended.end(), i), i);
    if (m.is_independent(extended)) {
      report.accepted = std::move(extended);
      report.alg_value += realization[i];
    }
  }
  report.prophet_value = set_weight(realization, max_weight_basis(m, realization));
  return report;
}

double expected_value_fixed(const ProphetInstance& inst, const ThresholdRule& rule,
                            const ArrivalOrder& order, EnumerationCap cap) {
  const int n = inst.size();
  order.validate(n);
  if (static_cast<int>(rule.size()) != n) {
    throw ValidationError("rule does not cover every item");
  }
  if (n > 64) throw CapExceeded("exact evaluation limited to 64 items");

  std::vector<PassStats> stats(n);
  std::vector<Element> uncertain;
  std::uint64_t always = 0;
  for (Element i = 0; i < n; ++i) {
    stats[i] = pass_stats(inst.dist(i), rule[i]);
    if (stats[i].probability >= 1.0) {
      always |= std::uint64_t{1} << i;
    } else if (stats[i].probability > 0.0) {
      uncertain.push_back(i);
    }
  }
  const int k = static_cast<int>(uncertain.size());
  cap.check(std::ldexp(1.0, k), "pass-pattern enumeration");

  const Matroid& m = inst.matroid();
  double total = 0.0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k); ++pattern) {
    double prob = 1.0;
    std::uint64_t passing = always;
    for (int j = 0; j < k; ++j) {
      const Element e = uncertain[j];
      if (pattern >> j & 1) {
        prob *= stats[e].probability;
        passing |= std::uint64_t{1} << e;
      } else {
        prob *= 1.0 - stats[e].probability;
      }
    }
    if (prob == 0.0) continue;
    std::uint64_t accepted = 0;
    double value = 0.0;
    for (Element i : order.permutation) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(passing & bit)) continue;
      if (m.is_independent_mask(accepted | bit)) {
        accepted |= bit;
        value += stats[i].conditional_mean;
      }
    }
    total += prob * value;
  }
  return total;
}

OrderPolicy OrderPolicy::worst_case(std::span<const double> reduced_t) {
  return OrderPolicy({worst_case_order(reduced_t), OrderTag::kWorstCase}, false,
                     static_cast<int>(reduced_t.size()));
}

OrderPolicy OrderPolicy::fixed(std::vector<Element> permutation, OrderTag tag) {
  const int n = static_cast<int>(permutation.size());
  ArrivalOrder order{std::move(permutation), tag};
  order.validate(n);
  return OrderPolicy(std::move(order), false, n);
}

OrderPolicy OrderPolicy::uniformly_random(int n) {
  std::vector<Element> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return OrderPolicy({std::move(identity), OrderTag::kRandom}, true, n);
}

ArrivalOrder OrderPolicy::draw(Rng& rng) const {
  if (!random_) return order_;
  ArrivalOrder order = order_;
  shuffle(order.permutation, rng);
  return order;
}

std::vector<std::pair<double, ArrivalOrder>> OrderPolicy::enumerate(
    EnumerationCap cap) const {
  if (!random_) return {{1.0, order_}};
  cap.check(std::tgamma(n_ + 1.0), "arrival-order enumeration");
  std::vector<std::pair<double, ArrivalOrder>> out;
  ArrivalOrder order = order_;
  std::sort(order.permutation.begin(), order.permutation.end());
  do {
    out.emplace_back(0.0, order);
  } while (std::next_permutation(order.permutation.begin(),
                                 order.permutation.end()));
  for (auto& [prob, _] : out) prob = 1.0 / static_cast<double>(out.size());
  return out;
}

double expected_value_exact(const ProphetInstance& inst, const RuleBuilder& builder,
                            const OrderPolicy& policy, EnumerationCap cap) {
  if (policy.size() != inst.size()) {
    throw ValidationError("order policy does not match the instance size");
  }
  const auto orders = policy.enumerate(cap);
  double total = 0.0;
  for (const WeightedRule& weighted : builder.enumerate(cap)) {
    if (weighted.probability == 0.0) continue;
    for (const auto& [order_prob, order] : orders) {
      total += weighted.probability * order_prob *
               expected_value_fixed(inst, weighted.rule, order, cap);
    }
  }
  return total;
}

double normal_critical_value(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ValidationError("confidence level must lie in (0, 1)");
  }
  const boost::math::normal standard;
  return boost::math::quantile(standard, 0.5 + 0.5 * confidence);
}

RatioSummary monte_carlo_ratio(
    const ProphetInstance& inst, const RuleBuilder& builder,
    const OrderPolicy& policy, std::uint64_t trials, std::uint64_t seed,
    double confidence,
    const std::function<void(std::uint64_t, const TrialReport&)>& sink) {
  if (trials == 0) throw ValidationError("need at least one trial");
  if (policy.size() != inst.size()) {
    throw ValidationError("order policy does not match the instance size");
  }
  const double z = normal_critical_value(confidence);
  const int n = inst.size();

  std::vector<double> alg(trials);
  std::vector<double> prophet(trials);
  for (std::uint64_t j = 0; j < trials; ++j) {
    Rng rng = make_stream(seed, j);
    const ThresholdRule rule = builder.sample(rng);
    const ArrivalOrder order = policy.draw(rng);
    std::vector<double> coins(n);
    for (double& c : coins) c = uniform01(rng);
    const WeightVector x = inst.sample(rng);
    TrialReport report = execute_online(inst, rule, order, x, coins);
    report.seed = stream_seed(seed, j);
    alg[j] = report.alg_value;
    prophet[j] = report.prophet_value;
    if (sink) sink(j, report);
  }

  RatioSummary summary;
  summary.trials = trials;
  summary.confidence = confidence;
  summary.low_sample = trials < RatioSummary::kRecommendedTrials;
  const double count = static_cast<double>(trials);
  summary.mean_alg = std::accumulate(alg.begin(), alg.end(), 0.0) / count;
  summary.mean_prophet = std::accumulate(prophet.begin(), prophet.end(), 0.0) / count;
  if (summary.mean_prophet <= 0.0) {
    summary.degenerate = true;
    summary.ratio = 1.0;
    return summary;
  }
  summary.ratio = summary.mean_alg / summary.mean_prophet;
  if (trials > 1) {
    // Delta method: Var(R) ~ Var(A - R P) / (n * mean(P)^2).
    double ss = 0.0;
    for (std::uint64_t j = 0; j < trials; ++j) {
      const double r = alg[j] - summary.ratio * prophet[j];
      ss += r * r;
    }
    const double var = ss / (count - 1.0);
    summary.half_width = z * std::sqrt(var / count) / summary.mean_prophet;
  }
  return summary;
}

std::pair<ArrivalOrder, double> adversarial_order_search(
    const ProphetInstance& inst, const ThresholdRule& rule, SearchMode mode,
    EnumerationCap cap, std::vector<Element> start) {
  const int n = inst.size();
  if (mode == SearchMode::kExhaustive) {
    if (n > 8) {
      throw CapExceeded("exhaustive order search is limited to 8 items");
    }
    ArrivalOrder order{std::vector<Element>(n), OrderTag::kAdversarialSearch};
    std::iota(order.permutation.begin(), order.permutation.end(), 0);
    ArrivalOrder best = order;
    double best_value = expected_value_fixed(inst, rule, order, cap);
    while (std::next_permutation(order.permutation.begin(),
                                 order.permutation.end())) {
      const double v = expected_value_fixed(inst, rule, order, cap);
      if (v < best_value) {
        best_value = v;
        best = order;
      }
    }
    return {best, best_value};
  }

  ArrivalOrder current{std::move(start), OrderTag::kAdversarialSearch};
  if (current.permutation.empty()) {
    current.permutation.resize(n);
    std::iota(current.permutation.begin(), current.permutation.end(), 0);
  }
  current.validate(n);
  double value = expected_value_fixed(inst, rule, current, cap);
  constexpr double kImprovement = 1e-12;
  while (true) {
    int best_swap = -1;
    double best_value = value;
    for (int j = 0; j + 1 < n; ++j) {
      std::swap(current.permutation[j], current.permutation[j + 1]);
      const double v = expected_value_fixed(inst, rule, current, cap);
      std::swap(current.permutation[j], current.permutation[j + 1]);
      if (v < best_value - kImprovement) {
        best_value = v;
        best_swap = j;
      }
    }
    if (best_swap < 0) break;
    std::swap(current.permutation[best_swap], current.permutation[best_swap + 1]);
    value = best_value;
  }
  return {current, value};
}

}  // namespace prophet
