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

#ifndef PROPHET_DISTRIBUTION_HPP_
#define PROPHET_DISTRIBUTION_HPP_

#include <cstddef>
#include <vector>

#include "prophet/common.hpp"

namespace prophet {

/// Finite-support nonnegative value distribution. Support is strictly
/// increasing and every listed value has positive probability. The
/// probabilities are renormalized to sum to exactly 1 after validation.
class DiscreteDistribution {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  DiscreteDistribution(std::vector<double> support, std::vector<double> probs,
                       double tolerance = kDefaultTolerance);

  static DiscreteDistribution point(double value);
  /// `value` w.p. p and 0 otherwise; collapses to a point mass when
  /// p is 0 or 1 or value is 0.
  static DiscreteDistribution bernoulli(double p, double value);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }
  double min() const { return support_.front(); }
  double max() const { return support_.back(); }
  bool is_deterministic() const { return support_.size() == 1; }
  double mean() const;

  double prob_above(double x) const;  // Pr[X > x]
  double prob_at(double x) const;     // Pr[X = x]
  double prob_below(double x) const;  // Pr[X < x]

  /// Index of the support value hit by uniform draw u in [0, 1).
  std::size_t index_for(double u) const;
  double sample(Rng& rng) const { return support_[index_for(uniform01(rng))]; }

  friend bool operator==(const DiscreteDistribution&,
                         const DiscreteDistribution&) = default;

 private:
  std::vector<double> support_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

/// Per-item threshold with an optional coin at the boundary atom: values
/// above `value` pass, values equal to it pass with probability
/// `atom_accept_prob`. The coin is drawn before arrivals, so the rule stays
/// non-adaptive. value == +inf never passes.
struct ItemThreshold {
  double value = kInfinity;
  double atom_accept_prob = 1.0;

  static ItemThreshold never() { return {}; }
  /// Plain comparison x >= value.
  static ItemThreshold at_least(double value) { return {value, 1.0}; }

  bool is_finite() const { return value != kInfinity; }
  bool passes(double x, double coin) const {
    return x > value || (x == value && coin < atom_accept_prob);
  }

  friend bool operator==(const ItemThreshold&, const ItemThreshold&) = default;
};

struct PassStats {
  double probability = 0.0;
  /// E[X | pass]; 0 when the pass probability is 0.
  double conditional_mean = 0.0;
};

/// Exact pass probability and conditional pass mean of a threshold.
PassStats pass_stats(const DiscreteDistribution& d, const ItemThreshold& t);

/// Threshold T in the support and atom coin q with
/// Pr[X > T] + q Pr[X = T] == p.
ItemThreshold quantile_threshold(const DiscreteDistribution& d, double p);

/// Mean of the top-p probability mass of d, i.e. E[X | quantile pass event
/// of measure p]. p must lie in (0, 1].
double tail_expectation(const DiscreteDistribution& d, double p);

}  // namespace prophet

#endif  // PROPHET_DISTRIBUTION_HPP_
