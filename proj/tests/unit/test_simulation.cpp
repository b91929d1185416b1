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

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "prophet/algorithms.hpp"
#include "prophet/simulation.hpp"
#include "test_util.hpp"

using namespace prophet;
using doctest::Approx;

namespace {

std::vector<Element> identity(int n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

ThresholdRule random_rule(const ProphetInstance& inst, Rng& rng) {
  std::vector<ItemThreshold> items;
  for (int i = 0; i < inst.size(); ++i) {
    if (uniform_below(rng, 5) == 0) {
      items.push_back(ItemThreshold::never());
    } else {
      const auto& s = inst.dist(i).support();
      items.push_back({s[uniform_below(rng, s.size())], uniform01(rng)});
    }
  }
  return ThresholdRule(items);
}

}  // namespace

TEST_SUITE("simulation") {

TEST_CASE("execute_online examples") {
  const auto k3 = testing_util::triangle();
  const ProphetInstance inst(k3, {DiscreteDistribution::point(3), DiscreteDistribution::point(2),
                                  DiscreteDistribution::point(1)});
  const std::vector<double> x{3, 2, 1};
  const std::vector<double> coins{0.5, 0.5, 0.5};
  const ArrivalOrder order{{2, 1, 0}, OrderTag::kWorstCase};

  const TrialReport none = execute_online(inst, ThresholdRule::reject_all(3), order, x, coins);
  CHECK(none.accepted.empty());
  CHECK(none.alg_value == 0.0);
  CHECK(none.prophet_value == 5.0);

  const TrialReport all =
      execute_online(inst, ThresholdRule::uniform(3, ItemThreshold::at_least(0)), order, x, coins);
  CHECK(all.accepted == ElementSet{1, 2});
  CHECK(all.alg_value == 3.0);
  CHECK(all.order.permutation == order.permutation);
  CHECK(all.coins == coins);

  const ProphetInstance single(std::make_shared<UniformMatroid>(1, 1),
                               {DiscreteDistribution::point(4)});
  const TrialReport one = execute_online(single, ThresholdRule::uniform(1, {3.0, 1.0}),
                                         {{0}, OrderTag::kExplicit}, std::vector<double>{4},
                                         std::vector<double>{0.9});
  CHECK(one.accepted == ElementSet{0});
}

TEST_CASE("order validation") {
  CHECK_THROWS_AS((ArrivalOrder{{0, 0, 1}, OrderTag::kExplicit}.validate(3)), ValidationError);
  CHECK_THROWS_AS((ArrivalOrder{{0, 1}, OrderTag::kExplicit}.validate(3)), ValidationError);
  CHECK_NOTHROW((ArrivalOrder{{2, 0, 1}, OrderTag::kExplicit}.validate(3)));
}

TEST_CASE("feasibility, accounting and monotonicity") {
  Rng rng = make_stream(61, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const auto inst = testing_util::random_instance(
        rng, testing_util::random_matroid(rng, n, trial), 3);
    const ThresholdRule rule = random_rule(inst, rng);
    std::vector<Element> perm = identity(n);
    prophet::shuffle(perm, rng);
    WeightVector x = inst.sample(rng);
    std::vector<double> coins(n);
    for (double& c : coins) c = uniform01(rng);
    const TrialReport r = execute_online(inst, rule, {perm, OrderTag::kRandom}, x, coins);
    CHECK(inst.matroid().is_independent(r.accepted));
    CHECK(r.alg_value == Approx(set_weight(x, r.accepted)));
    CHECK(r.prophet_value == Approx(oracle::best_weight(inst.matroid(), x)));
    CHECK(r.alg_value <= r.prophet_value + 1e-12);

    const Element bump = static_cast<Element>(uniform_below(rng, n));
    const double before = x[bump];
    x[bump] += 1.0 + uniform01(rng) * 5;
    const TrialReport higher = execute_online(inst, rule, {perm, OrderTag::kRandom}, x, coins);
    for (Element e : higher.accepted) {
      if (e != bump) CHECK(contains(r.accepted, e));
    }
    if (rule.passes(bump, before, coins[bump]) == rule.passes(bump, x[bump], coins[bump])) {
      CHECK(higher.accepted == r.accepted);
      CHECK(higher.alg_value >= r.alg_value - 1e-12);
    }
  }
}

TEST_CASE("raising a value can displace a more valuable later item") {
  const ProphetInstance inst(std::make_shared<UniformMatroid>(2, 1),
                             {DiscreteDistribution({0, 1.5}, {0.5, 0.5}),
                              DiscreteDistribution::point(12)});
  const ThresholdRule rule = ThresholdRule::uniform(2, ItemThreshold::at_least(1));
  const ArrivalOrder order{{0, 1}, OrderTag::kExplicit};
  const std::vector<double> coins{0.5, 0.5};
  const TrialReport low = execute_online(inst, rule, order, std::vector<double>{0, 12}, coins);
  const TrialReport high = execute_online(inst, rule, order, std::vector<double>{1.5, 12}, coins);
  CHECK(low.alg_value == 12.0);
  CHECK(high.alg_value == 1.5);
}

TEST_CASE("exact expectations agree with the brute-force oracle") {
  Rng rng = make_stream(62, 0);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const auto inst = testing_util::random_instance(
        rng, testing_util::random_matroid(rng, n, trial), 3);
    const ThresholdRule rule = random_rule(inst, rng);
    std::vector<Element> perm = identity(n);
    prophet::shuffle(perm, rng);
    const double exact = expected_value_fixed(inst, rule, {perm, OrderTag::kExplicit});
    CHECK(exact == Approx(oracle::online_value(inst, rule, perm)).epsilon(1e-10));

    if (n <= 4) {
      double average = 0.0;
      int count = 0;
      std::vector<Element> p = identity(n);
      do {
        average += oracle::online_value(inst, rule, p);
        ++count;
      } while (std::next_permutation(p.begin(), p.end()));
      const FixedRuleBuilder builder("fixed", rule);
      CHECK(expected_value_exact(inst, builder, OrderPolicy::uniformly_random(n)) ==
            Approx(average / count).epsilon(1e-10));
    }
  }
}

TEST_CASE("Monte Carlo agrees with exact expectation within four standard errors") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto inst = testing_util::small_graphic(seed, 4, 5, 3);
    const GraphicPlan plan = plan_graphic(inst);
    const GraphicCutBuilder builder(inst, plan);
    const OrderPolicy policy = OrderPolicy::worst_case(plan.reduced.t());
    const double exact = expected_value_exact(inst, builder, policy);
    std::vector<double> alg;
    const RatioSummary s = monte_carlo_ratio(
        inst, builder, policy, 50000, seed, 0.99,
        [&](std::uint64_t, const TrialReport& r) { alg.push_back(r.alg_value); });
    double ss = 0.0;
    for (double a : alg) ss += (a - s.mean_alg) * (a - s.mean_alg);
    const double se = std::sqrt(ss / (alg.size() - 1) / alg.size());
    CHECK(std::abs(s.mean_alg - exact) <= 4 * se + 1e-12);
    CHECK(std::abs(s.mean_prophet - prophet_value_exact(inst)) <= 0.2);
    CHECK(s.trials == 50000);
  }
}

TEST_CASE("Monte Carlo reporting") {
  const ProphetInstance fixed(testing_util::triangle(),
                              {DiscreteDistribution::point(3), DiscreteDistribution::point(2),
                               DiscreteDistribution::point(1)});
  const FixedRuleBuilder all("all", ThresholdRule::uniform(3, ItemThreshold::at_least(0)));
  const RatioSummary s =
      monte_carlo_ratio(fixed, all, OrderPolicy::fixed({0, 1, 2}), 2000, 1);
  CHECK(s.half_width == 0.0);
  CHECK(s.ratio == Approx(1.0));
  CHECK_FALSE(s.low_sample);
  CHECK(monte_carlo_ratio(fixed, all, OrderPolicy::fixed({0, 1, 2}), 10, 1).low_sample);

  const ProphetInstance zero(std::make_shared<UniformMatroid>(1, 1),
                             {DiscreteDistribution::point(0)});
  const FixedRuleBuilder none("none", ThresholdRule::reject_all(1));
  const RatioSummary z = monte_carlo_ratio(zero, none, OrderPolicy::fixed({0}), 100, 1);
  CHECK(z.degenerate);
  CHECK(z.ratio == 1.0);

  CHECK_THROWS_AS(monte_carlo_ratio(fixed, all, OrderPolicy::fixed({0, 1, 2}), 0, 1),
                  ValidationError);
  CHECK(normal_critical_value(0.99) == Approx(2.5758293035489));
  CHECK(normal_critical_value(0.95) == Approx(1.959963984540));
}

TEST_CASE("Monte Carlo runs are reproducible per seed") {
  const auto inst = testing_util::small_graphic(4);
  const GraphicPlan plan = plan_graphic(inst);
  const GraphicCutBuilder builder(inst, plan);
  const OrderPolicy policy = OrderPolicy::uniformly_random(inst.size());
  std::vector<TrialReport> a, b;
  monte_carlo_ratio(inst, builder, policy, 500, 77, 0.99,
                    [&](std::uint64_t, const TrialReport& r) { a.push_back(r); });
  monte_carlo_ratio(inst, builder, policy, 500, 77, 0.99,
                    [&](std::uint64_t, const TrialReport& r) { b.push_back(r); });
  REQUIRE(a.size() == b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(a[j].accepted == b[j].accepted);
    CHECK(a[j].realization == b[j].realization);
    CHECK(a[j].order.permutation == b[j].order.permutation);
    CHECK(a[j].seed == b[j].seed);
    CHECK(a[j].seed == stream_seed(77, j));
  }
}

TEST_CASE("adversarial order search") {
  const BernoulliInstance two(std::make_shared<UniformMatroid>(2, 1), {0.5, 0.7}, {5, 2});
  const ProphetInstance bern = two.as_prophet_instance();
  const ThresholdRule rule = quantile_rule(bern, two.p());
  const auto [order, value] = adversarial_order_search(bern, rule, SearchMode::kExhaustive);
  CHECK(order.permutation == std::vector<Element>{1, 0});
  CHECK(order.tag == OrderTag::kAdversarialSearch);
  CHECK(value == Approx(expected_value_fixed(bern, rule, {{1, 0}, OrderTag::kExplicit})));
  CHECK(value < expected_value_fixed(bern, rule, {{0, 1}, OrderTag::kExplicit}));

  const auto inst = testing_util::small_graphic(2);
  const auto [o2, v2] =
      adversarial_order_search(inst, ThresholdRule::reject_all(inst.size()), SearchMode::kExhaustive);
  CHECK(v2 == 0.0);

  const ProphetInstance nine(std::make_shared<UniformMatroid>(9, 2),
                             std::vector<DiscreteDistribution>(9, DiscreteDistribution::point(1)));
  CHECK_THROWS_AS(adversarial_order_search(nine, ThresholdRule::reject_all(9),
                                           SearchMode::kExhaustive),
                  CapExceeded);
  CHECK_NOTHROW(adversarial_order_search(nine, ThresholdRule::reject_all(9), SearchMode::kLocal));
}

TEST_CASE("t-ascending order is never beaten on Bernoulli instances") {
  Rng rng = make_stream(63, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    const auto m = testing_util::random_matroid(rng, n, trial);
    const BernoulliInstance b = ex_ante_reduce(testing_util::random_instance(rng, m, 3));
    const ProphetInstance bern = b.as_prophet_instance();
    for (double scaleby : {1.0, 0.25}) {
      const ThresholdRule rule = quantile_rule(bern, scale(b.p(), scaleby));
      const auto asc = worst_case_order(b);
      const double worst = expected_value_fixed(bern, rule, {asc, OrderTag::kWorstCase});
      const auto [order, minimum] = adversarial_order_search(bern, rule, SearchMode::kExhaustive);
      CHECK(minimum >= worst - 1e-9);
      if (n <= 5) CHECK(oracle::min_over_orders(bern, rule) >= worst - 1e-9);
      const auto [local, local_value] =
          adversarial_order_search(bern, rule, SearchMode::kLocal, {}, identity(n));
      CHECK(local_value >= minimum - 1e-12);
      CHECK(local_value <= expected_value_fixed(bern, rule, {identity(n), OrderTag::kExplicit}) + 1e-12);
    }
  }
}

TEST_CASE("exact enumeration respects the cap") {
  const auto inst = testing_util::small_graphic(3, 6, 9, 3);
  const GraphicPlan plan = plan_graphic(inst);
  const GraphicCutBuilder builder(inst, plan);
  EnumerationCap cap;
  cap.max_outcomes = 10;
  CHECK_THROWS_AS(expected_value_exact(inst, builder, OrderPolicy::worst_case(plan.reduced.t()), cap),
                  CapExceeded);
  CHECK_THROWS_AS(OrderPolicy::uniformly_random(12).enumerate(cap), CapExceeded);
}

}  // TEST_SUITE
