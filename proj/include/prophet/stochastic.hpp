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

// Stochastic instances, the prophet benchmark, and the ex-ante reduction to
// a Bernoulli instance whose activation vector lies in the matroid polytope.
//
// The reduction sets p_i = Pr[i in I*] for the greedy max-weight basis I*
// of each realization, and t_i = E[X_i | X_i in its top p_i mass]. Since
// E[X_i | i in I*] <= t_i, sum_i p_i t_i bounds the prophet from above, and
// p is a mixture of independent-set indicators, hence in the polytope.
//
// Boundary atoms are handled with an upfront coin (see quantile_threshold)
// so the activation event of item i has probability exactly p_i.

#ifndef PROPHET_STOCHASTIC_HPP_
#define PROPHET_STOCHASTIC_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "prophet/common.hpp"
#include "prophet/distribution.hpp"
#include "prophet/matroid.hpp"
#include "prophet/threshold_rule.hpp"

namespace prophet {

class ProphetInstance {
 public:
  ProphetInstance(MatroidPtr matroid, std::vector<DiscreteDistribution> dists);

  const Matroid& matroid() const { return *matroid_; }
  const MatroidPtr& matroid_ptr() const { return matroid_; }
  const std::vector<DiscreteDistribution>& dists() const { return dists_; }
  const DiscreteDistribution& dist(Element i) const { return dists_.at(i); }
  int size() const { return static_cast<int>(dists_.size()); }

  /// Number of joint outcomes of the product distribution (as a double so
  /// huge products do not overflow).
  double outcome_count() const;

  WeightVector sample(Rng& rng) const;

 private:
  MatroidPtr matroid_;
  std::vector<DiscreteDistribution> dists_;
};

/// Item i is worth t_i with probability p_i and 0 otherwise.
class BernoulliInstance {
 public:
  BernoulliInstance(MatroidPtr matroid, WeightVector p, WeightVector t);

  const Matroid& matroid() const { return *matroid_; }
  const MatroidPtr& matroid_ptr() const { return matroid_; }
  const WeightVector& p() const { return p_; }
  const WeightVector& t() const { return t_; }
  int size() const { return static_cast<int>(p_.size()); }

  /// sum_i p_i t_i, the relaxed benchmark.
  double benchmark() const;

  /// The same instance as two-point distributions {0, t_i}.
  ProphetInstance as_prophet_instance() const;

 private:
  MatroidPtr matroid_;
  WeightVector p_;
  WeightVector t_;
};

/// Calls visit(realization, probability) for every joint outcome of the
/// product distribution. Throws CapExceeded above the cap.
void for_each_outcome(
    const ProphetInstance& inst, EnumerationCap cap,
    const std::function<void(std::span<const double>, double)>& visit);

/// E[max_{I independent} sum_{i in I} X_i] by full enumeration.
double prophet_value_exact(const ProphetInstance& inst, EnumerationCap cap = {});

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

/// Sample-mean estimate of the prophet value; trial j uses
/// make_stream(seed, j).
MonteCarloEstimate prophet_value_mc(const ProphetInstance& inst,
                                    std::uint64_t trials, std::uint64_t seed);

enum class ReductionMode { kExact, kMonteCarlo };

struct ReductionOptions {
  ReductionMode mode = ReductionMode::kExact;
  std::uint64_t trials = 100000;  // Monte Carlo mode only
  std::uint64_t seed = 0;         // Monte Carlo mode only
  EnumerationCap cap = {};
};

/// Ex-ante reduction. Exact mode enumerates the product distribution;
/// Monte Carlo mode estimates p_i from sampled bases and computes t_i
/// exactly from the estimated p_i.
BernoulliInstance ex_ante_reduce(const ProphetInstance& inst,
                                 const ReductionOptions& options = {});

/// Items pass iff they clear the top-`pass_probs[i]` quantile event of
/// their own distribution (with atom coin).
ThresholdRule quantile_rule(const ProphetInstance& inst,
                            std::span<const double> pass_probs);

struct CoupledSample {
  WeightVector x;     // realized original values
  ElementSet active;  // items active in the Bernoulli view
  std::vector<double> coins;
};

/// One joint draw of the original and Bernoulli views: item i is active
/// exactly when x_i clears the (1 - p_i)-quantile event of F_i, sharing the
/// atom coin between the two views.
CoupledSample coupled_sample(const ProphetInstance& inst,
                             const BernoulliInstance& b, Rng& rng);

/// Items sorted by t ascending, ties broken by lower index.
std::vector<Element> worst_case_order(std::span<const double> t);
std::vector<Element> worst_case_order(const BernoulliInstance& b);

}  // namespace prophet

#endif  // PROPHET_STOCHASTIC_HPP_
