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

#include "prophet/graphic_prophet.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace prophet {

Orientation::Orientation(int vertices, std::vector<DirectedEdge> arcs,
                         std::span<const double> p_scaled)
    : arcs_(std::move(arcs)), in_mass_(vertices, 0.0) {
  if (p_scaled.size() != arcs_.size()) {
    throw ValidationError("orientation needs one probability per edge");
  }
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    in_mass_.at(arcs_[e].head) += p_scaled[e];
  }
}

double Orientation::max_in_mass() const {
  return in_mass_.empty() ? 0.0
                          : *std::max_element(in_mass_.begin(), in_mass_.end());
}

ElementSet Orientation::incoming(int v) const {
  ElementSet out;
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    if (arcs_[e].head == v) out.push_back(static_cast<Element>(e));
  }
  return out;
}

ElementSet Orientation::outgoing(int v) const {
  ElementSet out;
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    if (arcs_[e].tail == v) out.push_back(static_cast<Element>(e));
  }
  return out;
}

Orientation orient_low_indegree(const GraphicMatroid& g,
                                std::span<const double> p_scaled) {
  const int n_vertices = g.vertices();
  const auto& edges = g.edges();
  if (p_scaled.size() != edges.size()) {
    throw ValidationError("orientation needs one probability per edge");
  }
  std::vector<std::vector<Element>> incident(n_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(static_cast<Element>(e));
    incident[edges[e].v].push_back(static_cast<Element>(e));
  }

  std::vector<double> degree(n_vertices, 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    degree[edges[e].u] += p_scaled[e];
    degree[edges[e].v] += p_scaled[e];
  }

  std::vector<bool> removed(n_vertices, false);
  std::vector<bool> oriented(edges.size(), false);
  std::vector<DirectedEdge> arcs(edges.size());
  for (int step = 0; step < n_vertices; ++step) {
    int pick = -1;
    for (int v = 0; v < n_vertices; ++v) {
      if (!removed[v] && degree[v] <= 0.5 + kDegreeTolerance) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      throw ValidationError(
          "no remaining vertex has fractional degree <= 1/2; the scaled "
          "vector is not in (1/4) of the graphic polytope");
    }
    removed[pick] = true;
    for (Element e : incident[pick]) {
      if (oriented[e]) continue;
      oriented[e] = true;
      const int other = edges[e].u == pick ? edges[e].v : edges[e].u;
      arcs[e] = {other, pick};
      degree[other] -= p_scaled[e];
    }
  }
  return Orientation(n_vertices, std::move(arcs), p_scaled);
}

namespace {

void check_probabilities(const Matroid& m, std::span<const double> p) {
  if (static_cast<int>(p.size()) != m.size()) {
    throw ValidationError("probability vector length differs from ground set");
  }
}

}  // namespace

double blocking_probability(const Matroid& m, std::span<const double> p_active,
                            const ElementSet& s, Element i,
                            EnumerationCap cap) {
  check_probabilities(m, p_active);
  if (i < 0 || i >= m.size()) throw ValidationError("element out of range");
  const ElementSet members = make_element_set(s, m.size());

  ElementSet certain;
  std::vector<Element> uncertain;
  for (Element e : members) {
    if (e == i || p_active[e] <= 0.0) continue;
    if (p_active[e] >= 1.0) {
      certain.push_back(e);
    } else {
      uncertain.push_back(e);
    }
  }
  const int k = static_cast<int>(uncertain.size());
  if (k > 62) throw CapExceeded("blocking probability: too many elements");
  cap.check(std::ldexp(1.0, k), "blocking probability");

  const bool use_masks = m.size() <= 64;
  const std::uint64_t certain_mask = use_masks ? to_mask(certain) : 0;
  const std::uint64_t i_bit = use_masks ? std::uint64_t{1} << i : 0;

  double blocked = 0.0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k);
       ++pattern) {
    double prob = 1.0;
    std::uint64_t active_mask = certain_mask;
    ElementSet active = use_masks ? ElementSet{} : certain;
    for (int j = 0; j < k; ++j) {
      const Element e = uncertain[j];
      if (pattern >> j & 1) {
        prob *= p_active[e];
        if (use_masks) {
          active_mask |= std::uint64_t{1} << e;
        } else {
          active.push_back(e);
        }
      } else {
        prob *= 1.0 - p_active[e];
      }
    }
    bool spanned;
    if (use_masks) {
      spanned = m.rank_mask(active_mask | i_bit) == m.rank_mask(active_mask);
    } else {
      std::sort(active.begin(), active.end());
      spanned = m.spans(active, i);
    }
    if (spanned) blocked += prob;
  }
  return blocked;
}

double blocking_probability_mc(const Matroid& m,
                               std::span<const double> p_active,
                               const ElementSet& s, Element i,
                               std::uint64_t trials, Rng& rng) {
  check_probabilities(m, p_active);
  if (trials == 0) throw ValidationError("need at least one trial");
  const ElementSet members = make_element_set(s, m.size());
  std::uint64_t hits = 0;
  for (std::uint64_t j = 0; j < trials; ++j) {
    ElementSet active;
    for (Element e : members) {
      if (e != i && uniform01(rng) < p_active[e]) active.push_back(e);
    }
    hits += m.spans(active, i);
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

Cut Cut::from_mask(int vertices, std::uint64_t mask) {
  std::vector<bool> in_a(vertices);
  for (int v = 0; v < vertices; ++v) in_a[v] = (mask >> v) & 1;
  return Cut(std::move(in_a));
}

std::vector<int> Cut::side_a() const {
  std::vector<int> out;
  for (int v = 0; v < vertices(); ++v) {
    if (in_a_[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> Cut::side_b() const {
  std::vector<int> out;
  for (int v = 0; v < vertices(); ++v) {
    if (!in_a_[v]) out.push_back(v);
  }
  return out;
}

std::uint64_t Cut::mask() const {
  if (vertices() > 64) throw ValidationError("cut mask limited to 64 vertices");
  std::uint64_t mask = 0;
  for (int v = 0; v < vertices(); ++v) {
    if (in_a_[v]) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

Cut sample_cut(const GraphicMatroid& g, Rng& rng) {
  std::vector<bool> in_a(g.vertices());
  for (int v = 0; v < g.vertices(); ++v) in_a[v] = uniform01(rng) < 0.5;
  return Cut(std::move(in_a));
}

ElementSet consideration_set(const Orientation& o, const Cut& c) {
  if (o.vertices() != c.vertices()) {
    throw ValidationError("cut and orientation disagree on vertex count");
  }
  ElementSet out;
  for (std::size_t e = 0; e < o.arcs().size(); ++e) {
    const DirectedEdge& arc = o.arcs()[e];
    if (c.in_a(arc.tail) && !c.in_a(arc.head)) {
      out.push_back(static_cast<Element>(e));
    }
  }
  return out;
}

double cut_objective(const GraphicMatroid& g, std::span<const double> p_scaled,
                     std::span<const double> t, const Orientation& o,
                     const Cut& c, EnumerationCap cap) {
  if (t.size() != p_scaled.size()) {
    throw ValidationError("p and t differ in length");
  }
  const ElementSet considered = consideration_set(o, c);
  double total = 0.0;
  for (Element i : considered) {
    if (p_scaled[i] == 0.0 || t[i] == 0.0) continue;
    const double b = blocking_probability(g, p_scaled, considered, i, cap);
    total += p_scaled[i] * t[i] * (1.0 - b);
  }
  return total;
}

namespace {

// cut_objective for every cut, indexed by the cut's A-side mask.
std::vector<double> objective_table(const GraphicMatroid& g,
                                    std::span<const double> p_scaled,
                                    std::span<const double> t,
                                    const Orientation& o, EnumerationCap cap) {
  const int n = g.vertices();
  if (n > 40) throw CapExceeded("cut enumeration limited to 40 vertices");
  cap.check(std::ldexp(1.0, n), "cut enumeration");
  // Budget the blocking enumerations across all cuts, not just the cuts.
  double work = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int uncertain = 0;
    int scored = 0;
    for (Element e = 0; e < g.size(); ++e) {
      if (!(mask >> o.tail(e) & 1) || (mask >> o.head(e) & 1)) continue;
      uncertain += p_scaled[e] > 0.0 && p_scaled[e] < 1.0;
      scored += p_scaled[e] != 0.0 && t[e] != 0.0;
    }
    work += scored * std::ldexp(1.0, uncertain);
    cap.check(work, "cut enumeration");
  }
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = cut_objective(g, p_scaled, t, o, Cut::from_mask(n, mask), cap);
  }
  return table;
}

}  // namespace

double cut_bound_exact(const GraphicMatroid& g, std::span<const double> p_scaled,
                       std::span<const double> t, const Orientation& o,
                       EnumerationCap cap) {
  const std::vector<double> table = objective_table(g, p_scaled, t, o, cap);
  double total = 0.0;
  for (double v : table) total += v;
  return total / static_cast<double>(table.size());
}

Cut derandomize_cut(const GraphicMatroid& g, std::span<const double> p_scaled,
                    std::span<const double> t, const Orientation& o,
                    EnumerationCap cap) {
  const int n = g.vertices();
  const std::vector<double> table = objective_table(g, p_scaled, t, o, cap);
  // Vertices 0..v-1 are fixed in `fixed`; the rest are still random.
  std::uint64_t fixed = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;
    double in_a = 0.0;
    double in_b = 0.0;
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      if ((mask & low) != fixed) continue;
      ((mask >> v) & 1 ? in_a : in_b) += table[mask];
    }
    // Both branches average over the same number of completions.
    if (in_a >= in_b) fixed |= std::uint64_t{1} << v;
  }
  return Cut::from_mask(n, fixed);
}

std::shared_ptr<const GraphicMatroid> graphic_matroid_of(
    const ProphetInstance& inst) {
  auto graph = std::dynamic_pointer_cast<const GraphicMatroid>(inst.matroid_ptr());
  if (!graph) {
    throw ValidationError("algorithm requires a graphic matroid, got " +
                          inst.matroid().kind());
  }
  return graph;
}

GraphicPlan plan_graphic(const ProphetInstance& inst, BernoulliInstance reduced) {
  auto graph = graphic_matroid_of(inst);
  if (reduced.size() != inst.size()) {
    throw ValidationError("reduced instance does not match the graph");
  }
  WeightVector p_scaled = scale(reduced.p(), kActivationScale);
  Orientation orientation = orient_low_indegree(*graph, p_scaled);
  return GraphicPlan{std::move(graph), std::move(reduced), std::move(p_scaled),
                     std::move(orientation)};
}

GraphicPlan plan_graphic(const ProphetInstance& inst,
                         const ReductionOptions& options) {
  graphic_matroid_of(inst);
  return plan_graphic(inst, ex_ante_reduce(inst, options));
}

ThresholdRule rule_for_cut(const ProphetInstance& inst, const GraphicPlan& plan,
                           const Cut& c) {
  std::vector<ItemThreshold> items(inst.size());
  for (Element i : consideration_set(plan.orientation, c)) {
    if (plan.p_scaled[i] > 0.0) {
      items[i] = quantile_threshold(inst.dist(i), plan.p_scaled[i]);
    }
  }
  return ThresholdRule(std::move(items));
}

GraphicThresholds build_thresholds(const ProphetInstance& inst, Rng& rng,
                                   const ReductionOptions& options) {
  GraphicPlan plan = plan_graphic(inst, options);
  Cut cut = sample_cut(*plan.graph, rng);
  ThresholdRule rule = rule_for_cut(inst, plan, cut);
  ElementSet considered = consideration_set(plan.orientation, cut);
  return {std::move(rule), std::move(cut), std::move(considered),
          std::move(plan)};
}

GraphicThresholds build_thresholds_derandomized(const ProphetInstance& inst,
                                                const ReductionOptions& options) {
  GraphicPlan plan = plan_graphic(inst, options);
  Cut cut = derandomize_cut(*plan.graph, plan.p_scaled, plan.reduced.t(),
                            plan.orientation, options.cap);
  ThresholdRule rule = rule_for_cut(inst, plan, cut);
  ElementSet considered = consideration_set(plan.orientation, cut);
  return {std::move(rule), std::move(cut), std::move(considered),
          std::move(plan)};
}

}  // namespace prophet
