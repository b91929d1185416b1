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

#ifndef PROPHET_TESTS_TEST_UTIL_HPP_
#define PROPHET_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <memory>
#include <vector>

#include "prophet/instance_io.hpp"
#include "prophet/matroid.hpp"
#include "prophet/stochastic.hpp"

namespace testing_util {

using namespace prophet;

inline MatroidPtr triangle() {
  return std::make_shared<GraphicMatroid>(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
}

inline MatroidPtr random_graph(Rng& rng, int vertices, int edges) {
  std::vector<Edge> list;
  for (int e = 0; e < edges; ++e) {
    const int u = static_cast<int>(uniform_below(rng, vertices));
    int v = static_cast<int>(uniform_below(rng, vertices - 1));
    if (v >= u) ++v;
    list.push_back({u, v});
  }
  return std::make_shared<GraphicMatroid>(vertices, std::move(list));
}

inline MatroidPtr random_partition(Rng& rng, int n) {
  const int blocks = 1 + static_cast<int>(uniform_below(rng, std::min(n, 4)));
  std::vector<ElementSet> parts(blocks);
  for (int i = 0; i < n; ++i) {
    // The first `blocks` items seed each block so none is empty.
    const int b = i < blocks ? i : static_cast<int>(uniform_below(rng, blocks));
    parts[b].push_back(i);
  }
  std::vector<int> caps;
  for (const auto& part : parts) {
    caps.push_back(static_cast<int>(uniform_below(rng, part.size() + 1)));
  }
  return std::make_shared<PartitionMatroid>(parts, caps);
}

/// A graphic, uniform or partition matroid on `n` elements, cycling by index.
inline MatroidPtr random_matroid(Rng& rng, int n, int which) {
  switch (which % 3) {
    case 0:
      return random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 5)), n);
    case 1:
      return std::make_shared<UniformMatroid>(n, static_cast<int>(uniform_below(rng, n + 1)));
    default:
      return random_partition(rng, n);
  }
}

inline WeightVector random_weights(Rng& rng, int n, bool with_ties) {
  WeightVector w(n);
  for (double& x : w) {
    x = with_ties ? static_cast<double>(uniform_below(rng, 4)) : uniform01(rng) * 10.0;
  }
  return w;
}

inline DiscreteDistribution random_dist(Rng& rng, int max_support, int max_value = 10) {
  const int size = 1 + static_cast<int>(uniform_below(rng, max_support));
  std::vector<double> values;
  while (static_cast<int>(values.size()) < size) {
    const double v = static_cast<double>(uniform_below(rng, max_value + 1));
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  std::vector<double> probs(size);
  double total = 0.0;
  for (double& p : probs) total += (p = 0.1 + uniform01(rng));
  for (double& p : probs) p /= total;
  return DiscreteDistribution(values, probs, 1e-9);
}

inline ProphetInstance random_instance(Rng& rng, MatroidPtr m, int max_support) {
  std::vector<DiscreteDistribution> dists;
  for (int i = 0; i < m->size(); ++i) dists.push_back(random_dist(rng, max_support));
  return ProphetInstance(std::move(m), std::move(dists));
}

/// Random desk-scale graphic instance as produced by the generator.
inline ProphetInstance small_graphic(std::uint64_t seed, int vertices = 4, int edges = 5,
                                     int support = 3) {
  GeneratorSpec spec;
  spec.family = InstanceFamily::kRandomGraph;
  spec.vertices = vertices;
  spec.edges = edges;
  spec.support_size = support;
  return generate_instance(spec, seed);
}

}  // namespace testing_util

#endif  // PROPHET_TESTS_TEST_UTIL_HPP_
