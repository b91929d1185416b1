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

// Finite matroids exposed as independence / rank oracles.
//
// Every concrete matroid is immutable after construction, so a single
// instance may be shared across threads. Element sets passed to the oracle
// are validated against the ground-set size; out-of-range indices throw
// ValidationError.

#ifndef PROPHET_MATROID_HPP_
#define PROPHET_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "prophet/common.hpp"

namespace prophet {

class Matroid {
 public:
  virtual ~Matroid() = default;

  int size() const { return n_; }

  /// Optional human-readable element names; empty when unlabeled.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element e) const;

  /// "graphic", "uniform" or "partition".
  virtual std::string kind() const = 0;

  bool is_independent(const ElementSet& s) const;

  /// Size of the largest independent subset of `s`.
  int rank(const ElementSet& s) const;

  /// Every element whose addition leaves rank(s) unchanged. Contains s.
  ElementSet span(const ElementSet& s) const;

  /// True when `e` is spanned by `s`, i.e. rank(s + e) == rank(s).
  bool spans(const ElementSet& s, Element e) const;

  /// Bitmask forms for enumeration loops (ground sets of at most 64
  /// elements). Bit i stands for element i. No range validation.
  virtual bool is_independent_mask(std::uint64_t mask) const;
  virtual int rank_mask(std::uint64_t mask) const;

 protected:
  Matroid(int n, std::vector<std::string> labels);

  // `s` is canonical and in range.
  virtual bool independent_impl(const ElementSet& s) const = 0;
  virtual int rank_impl(const ElementSet& s) const;

  void check_set(const ElementSet& s) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Forests of a multigraph. Edge index == ground-set index. Parallel edges
/// are allowed; self-loops are rejected at construction.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<Edge> edges,
                 std::vector<std::string> labels = {});

  std::string kind() const override { return "graphic"; }
  int vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Element e) const { return edges_.at(e); }

  bool is_independent_mask(std::uint64_t mask) const override;
  int rank_mask(std::uint64_t mask) const override;

 protected:
  bool independent_impl(const ElementSet& s) const override;
  int rank_impl(const ElementSet& s) const override;

 private:
  int vertices_;
  std::vector<Edge> edges_;
};

/// Every set of size at most k.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int k, std::vector<std::string> labels = {});

  std::string kind() const override { return "uniform"; }
  int capacity() const { return k_; }

  bool is_independent_mask(std::uint64_t mask) const override;
  int rank_mask(std::uint64_t mask) const override;

 protected:
  bool independent_impl(const ElementSet& s) const override;
  int rank_impl(const ElementSet& s) const override;

 private:
  int k_;
};

/// Disjoint blocks covering the ground set, each with its own capacity.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<ElementSet> blocks, std::vector<int> capacities,
                   std::vector<std::string> labels = {});

  std::string kind() const override { return "partition"; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }
  int block_of(Element e) const { return block_of_.at(e); }

  bool is_independent_mask(std::uint64_t mask) const override;
  int rank_mask(std::uint64_t mask) const override;

 protected:
  bool independent_impl(const ElementSet& s) const override;
  int rank_impl(const ElementSet& s) const override;

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

double set_weight(std::span<const double> w, const ElementSet& s);

/// Greedy maximum-weight independent set: decreasing weight, lower index
/// first on ties, skipping spanned elements. Zero-weight elements are never
/// included, so the result is unique for any weight vector.
ElementSet max_weight_basis(const Matroid& m, std::span<const double> w);

struct PolytopeCheck {
  bool member = true;
  /// max over subsets S of sum_{i in S} p_i - rank(S); <= 0 for members.
  double max_violation = 0.0;
  ElementSet most_violated;
};

/// Exhaustive check of sum_{i in S} p_i <= rank(S) over all 2^n subsets.
/// Exponential by design: a test oracle, gated by `cap`.
PolytopeCheck polytope_check(const Matroid& m, std::span<const double> p,
                             EnumerationCap cap = {}, double tol = 1e-9);

bool polytope_membership(const Matroid& m, std::span<const double> p,
                         EnumerationCap cap = {}, double tol = 1e-9);

/// Entrywise c * p for c in [0, 1].
WeightVector scale(std::span<const double> p, double c);

/// Bitmask helpers for enumeration code.
std::uint64_t to_mask(const ElementSet& s);
ElementSet from_mask(std::uint64_t mask);

}  // namespace prophet

#endif  // PROPHET_MATROID_HPP_
