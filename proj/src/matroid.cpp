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

#include "prophet/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace prophet {

namespace {

// Union-find over a reusable per-thread buffer.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(buffer()) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  static std::vector<int>& buffer() {
    thread_local std::vector<int> storage;
    return storage;
  }
  std::vector<int>& parent_;
};

void check_labels(const std::vector<std::string>& labels, int n) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw ValidationError("labels must be empty or name every element");
  }
}

}  // namespace

Matroid::Matroid(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw ValidationError("ground set size must be nonnegative");
  check_labels(labels_, n_);
}

std::string Matroid::label(Element e) const {
  return labels_.empty() ? std::to_string(e) : labels_.at(e);
}

void Matroid::check_set(const ElementSet& s) const {
  for (Element e : s) {
    if (e < 0 || e >= n_) {
      throw ValidationError("element " + std::to_string(e) +
                            " outside ground set of size " +
                            std::to_string(n_));
    }
  }
}

bool Matroid::is_independent(const ElementSet& s) const {
  check_set(s);
  return independent_impl(make_element_set(s, n_));
}

int Matroid::rank(const ElementSet& s) const {
  check_set(s);
  return rank_impl(make_element_set(s, n_));
}

int Matroid::rank_impl(const ElementSet& s) const {
  ElementSet kept;
  for (Element e : s) {
    kept.push_back(e);
    if (!independent_impl(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

bool Matroid::spans(const ElementSet& s, Element e) const {
  if (e < 0 || e >= n_) throw ValidationError("element index out of range");
  ElementSet canonical = make_element_set(s, n_);
  if (contains(canonical, e)) return true;
  const int base = rank_impl(canonical);
  canonical.insert(std::upper_bound(canonical.begin(), canonical.end(), e), e);
  return rank_impl(canonical) == base;
}

ElementSet Matroid::span(const ElementSet& s) const {
  check_set(s);
  const ElementSet canonical = make_element_set(s, n_);
  const int base = rank_impl(canonical);
  ElementSet result;
  for (Element e = 0; e < n_; ++e) {
    if (contains(canonical, e)) {
      result.push_back(e);
      continue;
    }
    ElementSet extended = canonical;
    extended.insert(std::upper_bound(extended.begin(), extended.end(), e), e);
    if (rank_impl(extended) == base) result.push_back(e);
  }
  return result;
}

bool Matroid::is_independent_mask(std::uint64_t mask) const {
  return independent_impl(from_mask(mask));
}

int Matroid::rank_mask(std::uint64_t mask) const {
  return rank_impl(from_mask(mask));
}

// ---------------------------------------------------------------------------

GraphicMatroid::GraphicMatroid(int vertices, std::vector<Edge> edges,
                               std::vector<std::string> labels)
    : Matroid(static_cast<int>(edges.size()), std::move(labels)),
      vertices_(vertices),
      edges_(std::move(edges)) {
  if (vertices_ < 0) throw ValidationError("vertex count must be nonnegative");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertices_ || e.v >= vertices_) {
      throw ValidationError("edge " + std::to_string(i) +
                            " has an endpoint outside [0, " +
                            std::to_string(vertices_) + ")");
    }
    if (e.u == e.v) {
      throw ValidationError("edge " + std::to_string(i) + " is a self-loop");
    }
  }
}

bool GraphicMatroid::independent_impl(const ElementSet& s) const {
  DisjointSets components(vertices_);
  for (Element e : s) {
    if (!components.unite(edges_[e].u, edges_[e].v)) return false;
  }
  return true;
}

int GraphicMatroid::rank_impl(const ElementSet& s) const {
  DisjointSets components(vertices_);
  int merged = 0;
  for (Element e : s) merged += components.unite(edges_[e].u, edges_[e].v);
  return merged;
}

bool GraphicMatroid::is_independent_mask(std::uint64_t mask) const {
  DisjointSets components(vertices_);
  while (mask) {
    const int e = std::countr_zero(mask);
    mask &= mask - 1;
    if (!components.unite(edges_[e].u, edges_[e].v)) return false;
  }
  return true;
}

int GraphicMatroid::rank_mask(std::uint64_t mask) const {
  DisjointSets components(vertices_);
  int merged = 0;
  while (mask) {
    const int e = std::countr_zero(mask);
    mask &= mask - 1;
    merged += components.unite(edges_[e].u, edges_[e].v);
  }
  return merged;
}

// ---------------------------------------------------------------------------

UniformMatroid::UniformMatroid(int n, int k, std::vector<std::string> labels)
    : Matroid(n, std::move(labels)), k_(k) {
  if (k < 0) throw ValidationError("uniform matroid rank bound must be >= 0");
}

bool UniformMatroid::independent_impl(const ElementSet& s) const {
  return static_cast<int>(s.size()) <= k_;
}

int UniformMatroid::rank_impl(const ElementSet& s) const {
  return std::min(static_cast<int>(s.size()), k_);
}

bool UniformMatroid::is_independent_mask(std::uint64_t mask) const {
  return std::popcount(mask) <= k_;
}

int UniformMatroid::rank_mask(std::uint64_t mask) const {
  return std::min(std::popcount(mask), k_);
}

// ---------------------------------------------------------------------------

namespace {

int total_size(const std::vector<ElementSet>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return static_cast<int>(n);
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<ElementSet> blocks,
                                   std::vector<int> capacities,
                                   std::vector<std::string> labels)
    : Matroid(total_size(blocks), std::move(labels)),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)) {
  if (blocks_.size() != capacities_.size()) {
    throw ValidationError("partition needs one capacity per block");
  }
  const int n = size();
  block_of_.assign(n, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0) {
      throw ValidationError("block capacities must be >= 0");
    }
    std::sort(blocks_[b].begin(), blocks_[b].end());
    for (Element e : blocks_[b]) {
      if (e < 0 || e >= n) {
        throw ValidationError("partition element " + std::to_string(e) +
                              " outside [0, " + std::to_string(n) + ")");
      }
      if (block_of_[e] != -1) {
        throw ValidationError("partition blocks overlap at element " +
                              std::to_string(e));
      }
      block_of_[e] = static_cast<int>(b);
    }
  }
}

bool PartitionMatroid::independent_impl(const ElementSet& s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (Element e : s) {
    if (++used[block_of_[e]] > capacities_[block_of_[e]]) return false;
  }
  return true;
}

int PartitionMatroid::rank_impl(const ElementSet& s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (Element e : s) ++used[block_of_[e]];
  int r = 0;
  for (std::size_t b = 0; b < used.size(); ++b) {
    r += std::min(used[b], capacities_[b]);
  }
  return r;
}

bool PartitionMatroid::is_independent_mask(std::uint64_t mask) const {
  return independent_impl(from_mask(mask));
}

int PartitionMatroid::rank_mask(std::uint64_t mask) const {
  return rank_impl(from_mask(mask));
}

// ---------------------------------------------------------------------------

double set_weight(std::span<const double> w, const ElementSet& s) {
  double total = 0.0;
  for (Element e : s) total += w[e];
  return total;
}

ElementSet max_weight_basis(const Matroid& m, std::span<const double> w) {
  const int n = m.size();
  if (static_cast<int>(w.size()) != n) {
    throw ValidationError("weight vector length differs from ground set");
  }
  std::vector<Element> order;
  order.reserve(n);
  for (Element e = 0; e < n; ++e) {
    if (!(w[e] >= 0.0)) throw ValidationError("weights must be nonnegative");
    if (w[e] > 0.0) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return w[a] > w[b]; });
  ElementSet chosen;
  for (Element e : order) {
    ElementSet trial = chosen;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
    if (m.is_independent(trial)) chosen = std::move(trial);
  }
  return chosen;
}

PolytopeCheck polytope_check(const Matroid& m, std::span<const double> p,
                             EnumerationCap cap, double tol) {
  const int n = m.size();
  if (static_cast<int>(p.size()) != n) {
    throw ValidationError("probability vector length differs from ground set");
  }
  for (double x : p) {
    if (!(x >= 0.0)) throw ValidationError("polytope vectors must be >= 0");
  }
  if (n > 63) throw CapExceeded("polytope check limited to 63 elements");
  cap.check(std::ldexp(1.0, n), "polytope membership");

  PolytopeCheck result;
  result.max_violation = 0.0;  // the empty set
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    double sum = 0.0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      sum += p[std::countr_zero(bits)];
    }
    const double violation = sum - m.rank_mask(mask);
    if (violation > result.max_violation) {
      result.max_violation = violation;
      result.most_violated = from_mask(mask);
    }
  }
  result.member = result.max_violation <= tol;
  return result;
}

bool polytope_membership(const Matroid& m, std::span<const double> p,
                         EnumerationCap cap, double tol) {
  return polytope_check(m, p, cap, tol).member;
}

WeightVector scale(std::span<const double> p, double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ValidationError("scale factor must lie in [0, 1]");
  }
  WeightVector out(p.begin(), p.end());
  for (double& x : out) x *= c;
  return out;
}

std::uint64_t to_mask(const ElementSet& s) {
  std::uint64_t mask = 0;
  for (Element e : s) {
    if (e < 0 || e >= 64) throw ValidationError("mask form limited to 64 elements");
    mask |= std::uint64_t{1} << e;
  }
  return mask;
}

ElementSet from_mask(std::uint64_t mask) {
  ElementSet s;
  while (mask) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

}  // namespace prophet
