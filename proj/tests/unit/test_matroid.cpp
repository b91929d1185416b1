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

#include <bit>

#include "doctest.h"
#include "oracles.hpp"
#include "prophet/matroid.hpp"
#include "test_util.hpp"

using namespace prophet;
using testing_util::triangle;

namespace {

MatroidPtr parallel_pair() {
  return std::make_shared<GraphicMatroid>(2, std::vector<Edge>{{0, 1}, {0, 1}});
}

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("graphic independence on the triangle") {
  const auto k3 = triangle();
  CHECK(k3->is_independent({0, 1}));
  CHECK_FALSE(k3->is_independent({0, 1, 2}));
  CHECK(k3->is_independent({}));
  CHECK(k3->rank({0, 1, 2}) == 2);
  CHECK(k3->rank({}) == 0);
  CHECK(k3->span({0, 1}) == ElementSet{0, 1, 2});
  CHECK(k3->span({}) == ElementSet{});
}

TEST_CASE("parallel edges") {
  const auto m = parallel_pair();
  CHECK(m->rank({0, 1}) == 1);
  CHECK(m->span({0}) == ElementSet{0, 1});
  CHECK(m->spans({1}, 0));
}

TEST_CASE("uniform and partition independence") {
  const UniformMatroid u(4, 2);
  CHECK_FALSE(u.is_independent({0, 1, 2}));
  CHECK(u.is_independent({1, 3}));
  CHECK(u.rank({0, 1, 2, 3}) == 2);

  const PartitionMatroid p({{0, 1}, {2, 3, 4}}, {1, 2});
  CHECK(p.is_independent({0, 2, 3}));
  CHECK_FALSE(p.is_independent({0, 1}));
  CHECK(p.rank({0, 1, 2, 3, 4}) == 3);
  CHECK(p.block_of(3) == 1);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(GraphicMatroid(2, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(GraphicMatroid(2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(UniformMatroid(3, -1), ValidationError);
  CHECK(UniformMatroid(3, 4).is_independent({0, 1, 2}));
  CHECK_THROWS_AS(PartitionMatroid({{0, 1}, {1, 2}}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(PartitionMatroid({{0, 2}}, {1}), ValidationError);
  CHECK_THROWS_AS(triangle()->is_independent({3}), ValidationError);
  CHECK_THROWS_AS(triangle()->rank({-1}), ValidationError);
}

TEST_CASE("mask forms agree with set forms and with the oracle") {
  Rng rng = make_stream(11, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const auto m = testing_util::random_matroid(rng, n, trial);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      const ElementSet set = from_mask(s);
      CHECK(to_mask(set) == s);
      CHECK(m->is_independent(set) == oracle::independent(*m, s));
      CHECK(m->is_independent_mask(s) == oracle::independent(*m, s));
      CHECK(m->rank(set) == oracle::rank(*m, s));
      CHECK(m->rank_mask(s) == m->rank(set));
    }
  }
}

TEST_CASE("rank is monotone, 1-Lipschitz and submodular") {
  Rng rng = make_stream(12, 0);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const auto m = testing_util::random_matroid(rng, n, trial);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
      for (std::uint64_t t = 0; t <= full; ++t) {
        const int rs = m->rank_mask(s);
        const int rt = m->rank_mask(t);
        CHECK(m->rank_mask(s | t) + m->rank_mask(s & t) <= rs + rt);
        if ((s & t) == s) {
          CHECK(rs <= rt);
          CHECK(rt <= rs + std::popcount(t & ~s));
        }
      }
    }
  }
}

TEST_CASE("independent sets are down-closed and satisfy exchange") {
  Rng rng = make_stream(13, 0);
  for (int trial = 0; trial < 9; ++trial) {
    const int n = 8 + static_cast<int>(uniform_below(rng, 5));  // 8..12
    const auto m = testing_util::random_matroid(rng, n, trial);
    std::vector<std::uint64_t> indep;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (m->is_independent_mask(s)) indep.push_back(s);
    }
    for (std::uint64_t s : indep) {
      for (int e = 0; e < n; ++e) {
        if (s >> e & 1) CHECK(m->is_independent_mask(s & ~(std::uint64_t{1} << e)));
      }
    }
    // Exchange on a sample of pairs (all pairs would be quadratic in 2^12).
    for (int k = 0; k < 4000; ++k) {
      const auto a = indep[uniform_below(rng, indep.size())];
      const auto b = indep[uniform_below(rng, indep.size())];
      if (std::popcount(a) >= std::popcount(b)) continue;
      bool found = false;
      for (int e = 0; e < n && !found; ++e) {
        if ((b >> e & 1) && !(a >> e & 1)) {
          found = m->is_independent_mask(a | std::uint64_t{1} << e);
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("span is idempotent and monotone") {
  Rng rng = make_stream(14, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 7));
    const auto m = testing_util::random_matroid(rng, n, trial);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      const ElementSet sp = m->span(from_mask(s));
      CHECK((to_mask(sp) & s) == s);
      CHECK(m->span(sp) == sp);
      CHECK(m->rank(sp) == m->rank_mask(s));
      const std::uint64_t t = s | uniform_below(rng, std::uint64_t{1} << n);
      const std::uint64_t span_t = to_mask(m->span(from_mask(t)));
      CHECK((to_mask(sp) & span_t) == to_mask(sp));
    }
  }
}

TEST_CASE("max weight basis") {
  const auto k3 = triangle();
  const WeightVector w{3, 2, 1};
  const ElementSet basis = max_weight_basis(*k3, w);
  CHECK(basis == ElementSet{0, 1});
  CHECK(set_weight(w, basis) == 5.0);
  CHECK(max_weight_basis(*k3, WeightVector{0, 0, 0}).empty());
  // Ties go to the lower index; zero weights never enter.
  CHECK(max_weight_basis(*k3, WeightVector{1, 1, 1}) == ElementSet{0, 1});
  CHECK(max_weight_basis(UniformMatroid(3, 3), WeightVector{0, 2, 0}) == ElementSet{1});
}

TEST_CASE("greedy matches exhaustive search") {
  Rng rng = make_stream(15, 0);
  int mismatches = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 12));
    const auto m = testing_util::random_matroid(rng, n, trial);
    const WeightVector w = testing_util::random_weights(rng, n, trial % 2 == 0);
    const ElementSet basis = max_weight_basis(*m, w);
    CHECK(m->is_independent(basis));
    for (Element e : basis) CHECK(w[e] > 0.0);
    if (std::abs(set_weight(w, basis) - oracle::best_weight(*m, w)) > 1e-9) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("polytope membership") {
  const auto k3 = triangle();
  CHECK_FALSE(polytope_membership(*k3, WeightVector{1, 1, 1}));
  CHECK(polytope_membership(*k3, WeightVector{2.0 / 3, 2.0 / 3, 2.0 / 3}));
  CHECK(polytope_membership(*k3, WeightVector{0, 0, 0}));
  const PolytopeCheck bad = polytope_check(*k3, WeightVector{1, 1, 1});
  CHECK(bad.max_violation == doctest::Approx(1.0));
  CHECK(bad.most_violated == ElementSet{0, 1, 2});

  Rng rng = make_stream(16, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const auto m = testing_util::random_matroid(rng, n, trial);
    std::vector<std::uint64_t> indep;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      WeightVector indicator(n, 0.0);
      for (int i = 0; i < n; ++i) indicator[i] = s >> i & 1;
      const bool ok = m->is_independent_mask(s);
      CHECK(polytope_membership(*m, indicator) == ok);
      if (ok) indep.push_back(s);
    }
    for (int k = 0; k < 20; ++k) {
      const auto a = indep[uniform_below(rng, indep.size())];
      const auto b = indep[uniform_below(rng, indep.size())];
      const double lambda = uniform01(rng);
      WeightVector mix(n);
      for (int i = 0; i < n; ++i) mix[i] = lambda * (a >> i & 1) + (1 - lambda) * (b >> i & 1);
      CHECK(polytope_membership(*m, mix));
      CHECK(oracle::in_polytope(*m, mix));
    }
  }
}

TEST_CASE("polytope check respects the enumeration cap") {
  const UniformMatroid big(30, 3);
  EnumerationCap cap;
  cap.max_outcomes = 1000;
  CHECK_THROWS_AS(polytope_check(big, WeightVector(30, 0.0), cap), CapExceeded);
}

TEST_CASE("scale") {
  CHECK(scale(WeightVector{1, 1}, 0.25) == WeightVector{0.25, 0.25});
  CHECK(scale(WeightVector{0.3, 0.7}, 0.0) == WeightVector{0, 0});
  CHECK_THROWS_AS(scale(WeightVector{1}, 1.5), ValidationError);
  CHECK_THROWS_AS(scale(WeightVector{1}, -0.1), ValidationError);
  const auto k3 = triangle();
  const WeightVector p{2.0 / 3, 2.0 / 3, 2.0 / 3};
  CHECK(polytope_membership(*k3, scale(p, 0.25)));
}

TEST_CASE("labels") {
  const GraphicMatroid g(2, {{0, 1}}, {"road"});
  CHECK(g.label(0) == "road");
  CHECK(triangle()->label(2) == "2");
  CHECK_THROWS_AS(GraphicMatroid(2, {{0, 1}}, {"a", "b"}), ValidationError);
}

}  // TEST_SUITE
