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

#include "prophet/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace prophet {

DiscreteDistribution::DiscreteDistribution(std::vector<double> support,
                                           std::vector<double> probs,
                                           double tolerance)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty()) throw ValidationError("distribution support is empty");
  if (support_.size() != probs_.size()) {
    throw ValidationError("support and probabilities differ in length");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if (!(support_[j] >= 0.0) || !std::isfinite(support_[j])) {
      throw ValidationError("support values must be finite and >= 0");
    }
    if (j > 0 && !(support_[j] > support_[j - 1])) {
      throw ValidationError("support must be strictly increasing");
    }
    if (!(probs_[j] > 0.0)) {
      throw ValidationError("support probabilities must be positive");
    }
    total += probs_[j];
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(total) +
                          ", not 1");
  }
  cumulative_.resize(probs_.size());
  double running = 0.0;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    probs_[j] /= total;
    running += probs_[j];
    cumulative_[j] = running;
  }
  cumulative_.back() = 1.0;
}

DiscreteDistribution DiscreteDistribution::point(double value) {
  return DiscreteDistribution({value}, {1.0});
}

DiscreteDistribution DiscreteDistribution::bernoulli(double p, double value) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("activation probability outside [0, 1]");
  }
  if (p == 0.0 || value == 0.0) return point(0.0);
  if (p == 1.0) return point(value);
  return DiscreteDistribution({0.0, value}, {1.0 - p, p});
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (std::size_t j = 0; j < size(); ++j) m += support_[j] * probs_[j];
  return m;
}

double DiscreteDistribution::prob_above(double x) const {
  double total = 0.0;
  for (std::size_t j = size(); j-- > 0 && support_[j] > x;) total += probs_[j];
  return total;
}

double DiscreteDistribution::prob_at(double x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.end() || *it != x) return 0.0;
  return probs_[it - support_.begin()];
}

double DiscreteDistribution::prob_below(double x) const {
  double total = 0.0;
  for (std::size_t j = 0; j < size() && support_[j] < x; ++j) total += probs_[j];
  return total;
}

std::size_t DiscreteDistribution::index_for(double u) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min<std::size_t>(it - cumulative_.begin(), size() - 1);
}

PassStats pass_stats(const DiscreteDistribution& d, const ItemThreshold& t) {
  PassStats stats;
  if (!t.is_finite()) return stats;
  double mass = 0.0;
  double weighted = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double x = d.support()[j];
    double share = 0.0;
    if (x > t.value) {
      share = d.probs()[j];
    } else if (x == t.value) {
      share = d.probs()[j] * t.atom_accept_prob;
    }
    mass += share;
    weighted += share * x;
  }
  stats.probability = mass;
  stats.conditional_mean = mass > 0.0 ? weighted / mass : 0.0;
  return stats;
}

ItemThreshold quantile_threshold(const DiscreteDistribution& d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("quantile probability outside [0, 1]");
  }
  double above = 0.0;
  for (std::size_t j = d.size(); j-- > 0;) {
    const double atom = d.probs()[j];
    if (above + atom >= p || j == 0) {
      const double q = std::clamp((p - above) / atom, 0.0, 1.0);
      return {d.support()[j], q};
    }
    above += atom;
  }
  return ItemThreshold::never();  // unreachable: support is non-empty
}

double tail_expectation(const DiscreteDistribution& d, double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ValidationError("tail expectation needs p in (0, 1]");
  }
  const ItemThreshold t = quantile_threshold(d, p);
  double weighted = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double x = d.support()[j];
    if (x > t.value) {
      weighted += d.probs()[j] * x;
    } else if (x == t.value) {
      weighted += d.probs()[j] * t.atom_accept_prob * x;
    }
  }
  return weighted / p;
}

}  // namespace prophet
