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

// Single-threshold baselines for uniform and partition matroids.

#ifndef PROPHET_BASELINES_HPP_
#define PROPHET_BASELINES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "prophet/common.hpp"
#include "prophet/distribution.hpp"
#include "prophet/stochastic.hpp"
#include "prophet/threshold_rule.hpp"

namespace prophet {

/// One threshold shared by every item of a k-uniform instance.
struct UniformThreshold {
  ItemThreshold threshold;
  int capacity = 1;
  /// Set when the probabilistic calibration does not apply (all values
  /// zero, all items deterministic, or fewer items than slots).
  bool degenerate = false;
  std::string note;

  ThresholdRule expand(std::size_t n) const {
    return ThresholdRule::uniform(n, threshold);
  }
};

/// Pr[fewer than k items pass `t`], with per-item independent atom coins.
double prob_fewer_than_k_pass(const ProphetInstance& inst, int k,
                              const ItemThreshold& t);

/// Threshold with Pr[at least one item passes] == 1/2 on a 1-uniform
/// instance. Degenerate instances fall back to the Opt/2 threshold, or to
/// +inf when every value is zero.
UniformThreshold samuel_cahn_threshold(const ProphetInstance& inst,
                                       EnumerationCap cap = {});

/// Threshold with Pr[fewer than k items pass] == 1/2 on a k-uniform
/// instance. Same degenerate fallbacks as samuel_cahn_threshold.
UniformThreshold kuniform_probabilistic_threshold(const ProphetInstance& inst,
                                                  EnumerationCap cap = {});

/// T = Opt / (2k), compared as X_i >= T. `opt` is computed exactly when not
/// supplied.
UniformThreshold kuniform_opt_fraction_threshold(
    const ProphetInstance& inst, std::optional<double> opt = std::nullopt,
    EnumerationCap cap = {});

enum class BaselineMethod { kProbabilistic, kOptFraction };

/// Each block treated as its own capacity-k uniform instance.
ThresholdRule partition_thresholds(const ProphetInstance& inst,
                                   BaselineMethod method,
                                   EnumerationCap cap = {});

}  // namespace prophet

#endif  // PROPHET_BASELINES_HPP_
