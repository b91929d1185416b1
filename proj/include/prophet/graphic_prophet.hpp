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

// Random-cut thresholds for graphic matroids.
//
// Pipeline: reduce to a Bernoulli instance (p, t) with p in the graphic
// polytope, scale to p' = p / 4, orient every edge so each vertex receives
// at most 1/2 of p'-mass, then draw a uniform vertex cut (A, B). Only edges
// directed from A into B (the consideration set) get a finite threshold;
// every other edge gets +inf. An edge i directed into v can only be
// blocked by another active edge into v, because no edge leaving v
// crosses the cut when v is in B. So each considered edge is unblocked with
// probability >= 1/2, is considered with probability 1/4, and passes with
// probability p'_i, giving at least 1/32 of sum_i p_i t_i.
//
// The 1/4 scaling is realized in the value view as a quantile threshold
// at pass probability p_i / 4. On a Bernoulli item {0, t_i} that quantile
// is T = t_i with a 1/4 atom coin, i.e. an upfront independent 1/4-coin.

#ifndef PROPHET_GRAPHIC_PROPHET_HPP_
#define PROPHET_GRAPHIC_PROPHET_HPP_

#include <memory>
#include <vector>

#include "prophet/common.hpp"
#include "prophet/matroid.hpp"
#include "prophet/stochastic.hpp"
#include "prophet/threshold_rule.hpp"

namespace prophet {

inline constexpr double kActivationScale = 0.25;

/// Tolerance used when testing fractional degrees against 1/2.
inline constexpr double kDegreeTolerance = 1e-12;

struct DirectedEdge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

class Orientation {
 public:
  Orientation(int vertices, std::vector<DirectedEdge> arcs,
              std::span<const double> p_scaled);

  int vertices() const { return static_cast<int>(in_mass_.size()); }
  const std::vector<DirectedEdge>& arcs() const { return arcs_; }
  int tail(Element e) const { return arcs_.at(e).tail; }
  int head(Element e) const { return arcs_.at(e).head; }

  /// Sum of p_scaled over edges directed into each vertex.
  const std::vector<double>& in_mass() const { return in_mass_; }
  double max_in_mass() const;

  ElementSet incoming(int v) const;
  ElementSet outgoing(int v) const;

 private:
  std::vector<DirectedEdge> arcs_;
  std::vector<double> in_mass_;
};

/// Peels, lowest index first, a remaining vertex whose fractional degree in
/// the remaining graph is <= 1/2, directing its remaining edges into it.
/// Throws ValidationError when no vertex qualifies, which cannot happen for
/// p_scaled in (1/4) P_G.
Orientation orient_low_indegree(const GraphicMatroid& g,
                                std::span<const double> p_scaled);

/// b_i(S) = Pr[i in span(R(S \ {i}))] where R keeps each element j
/// independently with probability p_active[j]. Exact enumeration over the
/// uncertain members of S \ {i}.
double blocking_probability(const Matroid& m, std::span<const double> p_active,
                            const ElementSet& s, Element i,
                            EnumerationCap cap = {});

/// Monte Carlo estimate of blocking_probability.
double blocking_probability_mc(const Matroid& m,
                               std::span<const double> p_active,
                               const ElementSet& s, Element i,
                               std::uint64_t trials, Rng& rng);

class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<bool> in_a) : in_a_(std::move(in_a)) {}
  static Cut from_mask(int vertices, std::uint64_t mask);

  int vertices() const { return static_cast<int>(in_a_.size()); }
  bool in_a(int v) const { return in_a_.at(v); }
  std::vector<int> side_a() const;
  std::vector<int> side_b() const;
  std::uint64_t mask() const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  std::vector<bool> in_a_;
};

/// Each vertex joins A independently with probability 1/2.
Cut sample_cut(const GraphicMatroid& g, Rng& rng);

/// Edges whose tail is in A and head is in B.
ElementSet consideration_set(const Orientation& o, const Cut& c);

/// sum_{i in S} p'_i t_i (1 - b_i(S)) for the consideration set S of `c`,
/// with b_i computed against p'.
double cut_objective(const GraphicMatroid& g, std::span<const double> p_scaled,
                     std::span<const double> t, const Orientation& o,
                     const Cut& c, EnumerationCap cap = {});

/// Exact expectation of cut_objective over all 2^|V| cuts.
double cut_bound_exact(const GraphicMatroid& g, std::span<const double> p_scaled,
                       std::span<const double> t, const Orientation& o,
                       EnumerationCap cap = {});

/// Method of conditional expectations on cut_objective: vertices are
/// placed in index order, each on the side with the larger conditional
/// expectation (A on ties). The result's objective is >= cut_bound_exact.
Cut derandomize_cut(const GraphicMatroid& g, std::span<const double> p_scaled,
                    std::span<const double> t, const Orientation& o,
                    EnumerationCap cap = {});

/// The deterministic part of the pipeline: reduction, scaling, orientation.
struct GraphicPlan {
  std::shared_ptr<const GraphicMatroid> graph;
  BernoulliInstance reduced;
  WeightVector p_scaled;
  Orientation orientation;
};

/// Throws ValidationError unless the instance's matroid is graphic.
std::shared_ptr<const GraphicMatroid> graphic_matroid_of(
    const ProphetInstance& inst);

GraphicPlan plan_graphic(const ProphetInstance& inst,
                         const ReductionOptions& options = {});
GraphicPlan plan_graphic(const ProphetInstance& inst, BernoulliInstance reduced);

/// Quantile thresholds at pass probability p_i / 4 on the consideration
/// set of `c`, +inf elsewhere.
ThresholdRule rule_for_cut(const ProphetInstance& inst, const GraphicPlan& plan,
                           const Cut& c);

struct GraphicThresholds {
  ThresholdRule rule;
  Cut cut;
  ElementSet consideration;
  GraphicPlan plan;  // p, t, p', orientation in-degrees
};

GraphicThresholds build_thresholds(const ProphetInstance& inst, Rng& rng,
                                   const ReductionOptions& options = {});

/// Same pipeline with the derandomized cut in place of the random one.
GraphicThresholds build_thresholds_derandomized(
    const ProphetInstance& inst, const ReductionOptions& options = {});

}  // namespace prophet

#endif  // PROPHET_GRAPHIC_PROPHET_HPP_
