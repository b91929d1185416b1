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

#include "prophet/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace prophet {

ProphetInstance::ProphetInstance(MatroidPtr matroid,
                                 std::vector<DiscreteDistribution> dists)
    : matroid_(std::move(matroid)), dists_(std::move(dists)) {
  if (!matroid_) throw ValidationError("instance needs a matroid");
  if (static_cast<int>(dists_.size()) != matroid_->size()) {
    throw ValidationError("instance has " + std::to_string(dists_.size()) +
                          " distributions for a ground set of " +
                          std::to_string(matroid_->size()));
  }
}

double ProphetInstance::outcome_count() const {
  double count = 1.0;
  for (const auto& d : dists_) count *= static_cast<double>(d.size());
  return count;
}

WeightVector ProphetInstance::sample(Rng& rng) const {
  WeightVector x(dists_.size());
  for (std::size_t i = 0; i < dists_.size(); ++i) x[i] = dists_[i].sample(rng);
  return x;
}

BernoulliInstance::BernoulliInstance(MatroidPtr matroid, WeightVector p,
                                     WeightVector t)
    : matroid_(std::move(matroid)), p_(std::move(p)), t_(std::move(t)) {
  if (!matroid_) throw ValidationError("instance needs a matroid");
  if (static_cast<int>(p_.size()) != matroid_->size() ||
      p_.size() != t_.size()) {
    throw ValidationError("p and t must have one entry per element");
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0 && p_[i] <= 1.0)) {
      throw ValidationError("activation probabilities must lie in [0, 1]");
    }
    if (!(t_[i] >= 0.0) || !std::isfinite(t_[i])) {
      throw ValidationError("active values must be finite and >= 0");
    }
  }
}

double BernoulliInstance::benchmark() const {
  double total = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) total += p_[i] * t_[i];
  return total;
}

ProphetInstance BernoulliInstance::as_prophet_instance() const {
  std::vector<DiscreteDistribution> dists;
  dists.reserve(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    dists.push_back(DiscreteDistribution::bernoulli(p_[i], t_[i]));
  }
  return ProphetInstance(matroid_, std::move(dists));
}

void for_each_outcome(
    const ProphetInstance& inst, EnumerationCap cap,
    const std::function<void(std::span<const double>, double)>& visit) {
  cap.check(inst.outcome_count(), "product distribution");
  const int n = inst.size();
  std::vector<std::size_t> digit(n, 0);
  WeightVector x(n);
  for (int i = 0; i < n; ++i) x[i] = inst.dist(i).support()[0];
  while (true) {
    double prob = 1.0;
    for (int i = 0; i < n; ++i) prob *= inst.dist(i).probs()[digit[i]];
    visit(x, prob);
    int i = 0;
    for (; i < n; ++i) {
      const auto& d = inst.dist(i);
      if (++digit[i] < d.size()) {
        x[i] = d.support()[digit[i]];
        break;
      }
      digit[i] = 0;
      x[i] = d.support()[0];
    }
    if (i == n) return;
  }
}

double prophet_value_exact(const ProphetInstance& inst, EnumerationCap cap) {
  double total = 0.0;
  for_each_outcome(inst, cap, [&](std::span<const double> x, double prob) {
    total += prob * set_weight(x, max_weight_basis(inst.matroid(), x));
  });
  return total;
}

MonteCarloEstimate prophet_value_mc(const ProphetInstance& inst,
                                    std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw ValidationError("need at least one trial");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t j = 0; j < trials; ++j) {
    Rng rng = make_stream(seed, j);
    const WeightVector x = inst.sample(rng);
    const double v = set_weight(x, max_weight_basis(inst.matroid(), x));
    sum += v;
    sum_sq += v * v;
  }
  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double var = std::max(
        0.0, (sum_sq - sum * est.mean) / static_cast<double>(trials - 1));
    est.std_error = std::sqrt(var / static_cast<double>(trials));
  }
  return est;
}

namespace {

BernoulliInstance finish_reduction(const ProphetInstance& inst, WeightVector p) {
  WeightVector t(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::clamp(p[i], 0.0, 1.0);
    if (p[i] > 0.0) {
      t[i] = tail_expectation(inst.dist(static_cast<Element>(i)), p[i]);
    } else {
      p[i] = 0.0;
    }
  }
  return BernoulliInstance(inst.matroid_ptr(), std::move(p), std::move(t));
}

}  // namespace

BernoulliInstance ex_ante_reduce(const ProphetInstance& inst,
                                 const ReductionOptions& options) {
  WeightVector p(inst.size(), 0.0);
  if (options.mode == ReductionMode::kExact) {
    for_each_outcome(inst, options.cap,
                     [&](std::span<const double> x, double prob) {
                       for (Element e : max_weight_basis(inst.matroid(), x)) {
                         p[e] += prob;
                       }
                     });
  } else {
    if (options.trials == 0) throw ValidationError("need at least one trial");
    std::vector<std::uint64_t> hits(inst.size(), 0);
    for (std::uint64_t j = 0; j < options.trials; ++j) {
      Rng rng = make_stream(options.seed, j);
      const WeightVector x = inst.sample(rng);
      for (Element e : max_weight_basis(inst.matroid(), x)) ++hits[e];
    }
    for (int i = 0; i < inst.size(); ++i) {
      p[i] = static_cast<double>(hits[i]) / static_cast<double>(options.trials);
    }
  }
  return finish_reduction(inst, std::move(p));
}

ThresholdRule quantile_rule(const ProphetInstance& inst,
                            std::span<const double> pass_probs) {
  if (static_cast<int>(pass_probs.size()) != inst.size()) {
    throw ValidationError("one pass probability per item required");
  }
  std::vector<ItemThreshold> items;
  items.reserve(pass_probs.size());
  for (int i = 0; i < inst.size(); ++i) {
    items.push_back(pass_probs[i] > 0.0
                        ? quantile_threshold(inst.dist(i), pass_probs[i])
                        : ItemThreshold::never());
  }
  return ThresholdRule(std::move(items));
}

CoupledSample coupled_sample(const ProphetInstance& inst,
                             const BernoulliInstance& b, Rng& rng) {
  if (inst.size() != b.size()) {
    throw ValidationError("coupled views have different sizes");
  }
  const ThresholdRule rule = quantile_rule(inst, b.p());
  CoupledSample out;
  out.x.resize(inst.size());
  out.coins.resize(inst.size());
  for (int i = 0; i < inst.size(); ++i) {
    out.coins[i] = uniform01(rng);
    out.x[i] = inst.dist(i).sample(rng);
    if (rule.passes(i, out.x[i], out.coins[i])) out.active.push_back(i);
  }
  return out;
}

std::vector<Element> worst_case_order(std::span<const double> t) {
  std::vector<Element> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return t[a] < t[b]; });
  return order;
}

std::vector<Element> worst_case_order(const BernoulliInstance& b) {
  return worst_case_order(b.t());
}

}  // namespace prophet
