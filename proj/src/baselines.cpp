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

#include "prophet/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <utility>

#include "prophet/matroid.hpp"

namespace prophet {

namespace {

int uniform_capacity(const ProphetInstance& inst) {
  const auto* uniform = dynamic_cast<const UniformMatroid*>(&inst.matroid());
  if (uniform == nullptr) {
    throw ValidationError("baseline requires a uniform matroid, got " +
                          inst.matroid().kind());
  }
  return uniform->capacity();
}

// Poisson-binomial tail: Pr[#pass < k].
double fewer_than(const std::vector<double>& pass, int k) {
  std::vector<double> count(k + 1, 0.0);  // count[k] lumps ">= k"
  count[0] = 1.0;
  for (double q : pass) {
    for (int c = k; c >= 0; --c) {
      const double stay = count[c] * (1.0 - q);
      const double from_below = c > 0 ? count[c - 1] * q : 0.0;
      count[c] = (c == k ? count[c] : stay) + from_below;
    }
  }
  double total = 0.0;
  for (int c = 0; c < k; ++c) total += count[c];
  return total;
}

// Solves Pr[fewer than k pass] == 1/2 over (T, q). The pass event shrinks
// as T increases or q decreases, so the objective is monotone along the
// order (T descending, q ascending) and continuous between consecutive
// support values.
ItemThreshold calibrate_half(const ProphetInstance& inst, int k) {
  std::set<double> values;
  for (const auto& d : inst.dists()) values.insert(d.support().begin(), d.support().end());
  auto objective = [&](double t, double q) {
    return prob_fewer_than_k_pass(inst, k, {t, q});
  };
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    const double t = *it;
    if (objective(t, 1.0) > 0.5) continue;
    // objective(t, 0) >= 1/2 holds here: it equals objective(next above, 1)
    // or 1 at the top value.
    double lo = 0.0;  // objective >= 1/2
    double hi = 1.0;  // objective <= 1/2
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (objective(t, mid) > 0.5 ? lo : hi) = mid;
    }
    const double err_lo = std::abs(objective(t, lo) - 0.5);
    const double err_hi = std::abs(objective(t, hi) - 0.5);
    return {t, err_lo < err_hi ? lo : hi};
  }
  return {*values.begin(), 1.0};  // unreachable when n >= k
}

enum class Degeneracy { kNone, kAllZero, kDeterministic, kTooFewItems };

Degeneracy classify(const ProphetInstance& inst, int k) {
  const bool all_zero = std::all_of(inst.dists().begin(), inst.dists().end(),
                                    [](const auto& d) { return d.max() == 0.0; });
  if (all_zero) return Degeneracy::kAllZero;
  const bool all_point =
      std::all_of(inst.dists().begin(), inst.dists().end(),
                  [](const auto& d) { return d.is_deterministic(); });
  if (all_point) return Degeneracy::kDeterministic;
  if (inst.size() < k) return Degeneracy::kTooFewItems;
  return Degeneracy::kNone;
}

UniformThreshold probabilistic_or_fallback(const ProphetInstance& inst, int k,
                                           EnumerationCap cap) {
  if (k == 0) return {ItemThreshold::never(), 0, true, "capacity is zero"};
  switch (classify(inst, k)) {
    case Degeneracy::kAllZero:
      return {ItemThreshold::never(), k, true, "all values are zero"};
    case Degeneracy::kDeterministic: {
      UniformThreshold out = kuniform_opt_fraction_threshold(inst, std::nullopt, cap);
      out.degenerate = true;
      out.note = "deterministic instance; fell back to Opt/(2k) threshold";
      return out;
    }
    case Degeneracy::kTooFewItems: {
      UniformThreshold out = kuniform_opt_fraction_threshold(inst, std::nullopt, cap);
      out.degenerate = true;
      out.note = "fewer items than slots; fell back to Opt/(2k) threshold";
      return out;
    }
    case Degeneracy::kNone:
      break;
  }
  return {calibrate_half(inst, k), k, false, {}};
}

}  // namespace

double prob_fewer_than_k_pass(const ProphetInstance& inst, int k,
                              const ItemThreshold& t) {
  std::vector<double> pass;
  pass.reserve(inst.size());
  for (const auto& d : inst.dists()) pass.push_back(pass_stats(d, t).probability);
  return fewer_than(pass, k);
}

UniformThreshold samuel_cahn_threshold(const ProphetInstance& inst,
                                       EnumerationCap cap) {
  if (uniform_capacity(inst) != 1) {
    throw ValidationError("single-item threshold needs a 1-uniform matroid");
  }
  return probabilistic_or_fallback(inst, 1, cap);
}

UniformThreshold kuniform_probabilistic_threshold(const ProphetInstance& inst,
                                                  EnumerationCap cap) {
  return probabilistic_or_fallback(inst, uniform_capacity(inst), cap);
}

UniformThreshold kuniform_opt_fraction_threshold(const ProphetInstance& inst,
                                                 std::optional<double> opt,
                                                 EnumerationCap cap) {
  const int k = uniform_capacity(inst);
  if (k == 0) return {ItemThreshold::never(), 0, true, "capacity is zero"};
  const double prophet = opt ? *opt : prophet_value_exact(inst, cap);
  return {ItemThreshold::at_least(prophet / (2.0 * k)), k, false, {}};
}

ThresholdRule partition_thresholds(const ProphetInstance& inst,
                                   BaselineMethod method, EnumerationCap cap) {
  const auto* partition = dynamic_cast<const PartitionMatroid*>(&inst.matroid());
  if (partition == nullptr) {
    throw ValidationError("partition thresholds need a partition matroid, got " +
                          inst.matroid().kind());
  }
  std::vector<ItemThreshold> items(inst.size());
  for (std::size_t b = 0; b < partition->blocks().size(); ++b) {
    const ElementSet& block = partition->blocks()[b];
    if (block.empty()) continue;
    std::vector<DiscreteDistribution> dists;
    for (Element e : block) dists.push_back(inst.dist(e));
    const ProphetInstance restricted(
        std::make_shared<UniformMatroid>(static_cast<int>(block.size()),
                                         partition->capacities()[b]),
        std::move(dists));
    const UniformThreshold t =
        method == BaselineMethod::kProbabilistic
            ? kuniform_probabilistic_threshold(restricted, cap)
            : kuniform_opt_fraction_threshold(restricted, std::nullopt, cap);
    for (Element e : block) items[e] = t.threshold;
  }
  return ThresholdRule(std::move(items));
}

}  // namespace prophet
