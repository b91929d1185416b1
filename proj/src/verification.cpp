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

#include "prophet/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "prophet/algorithms.hpp"
#include "prophet/baselines.hpp"
#include "prophet/simulation.hpp"

namespace prophet {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkip:
      return "SKIP";
  }
  return "?";
}

namespace {

CheckResult graded(std::string name, double slack, double tolerance,
                   std::string detail = {}) {
  CheckResult r{std::move(name), CheckStatus::kPass, slack, std::move(detail)};
  if (!(slack >= -tolerance)) r.status = CheckStatus::kFail;
  return r;
}

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::kSkip, kInfinity, std::move(why)};
}

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << x;
  return out.str();
}

}  // namespace

CheckResult check_benchmark(const BernoulliInstance& reduced, double opt) {
  const double benchmark = reduced.benchmark();
  return graded(check::kBenchmark, benchmark - opt, check::kValueTolerance,
                "sum p t = " + fmt(benchmark) + ", Opt = " + fmt(opt));
}

CheckResult check_polytope(const BernoulliInstance& reduced, EnumerationCap cap) {
  const PolytopeCheck pc = polytope_check(reduced.matroid(), reduced.p(), cap);
  std::string detail = "max violation " + fmt(pc.max_violation);
  if (!pc.member) {
    detail += " on {";
    for (std::size_t j = 0; j < pc.most_violated.size(); ++j) {
      detail += (j ? "," : "") + std::to_string(pc.most_violated[j]);
    }
    detail += "}";
  }
  return graded(check::kPolytope, -pc.max_violation, check::kValueTolerance,
                std::move(detail));
}

CouplingAudit audit_coupling(const ProphetInstance& inst,
                             const BernoulliInstance& reduced, EnumerationCap cap) {
  const int n = inst.size();
  if (reduced.size() != n) throw ValidationError("reduction size mismatch");
  const ThresholdRule value_rule = quantile_rule(inst, reduced.p());
  const ProphetInstance bernoulli = reduced.as_prophet_instance();
  const ThresholdRule bernoulli_rule = quantile_rule(bernoulli, reduced.p());
  const ArrivalOrder order{worst_case_order(reduced.t()), OrderTag::kWorstCase};

  int fractional = 0;
  for (int i = 0; i < n; ++i) {
    const double q = value_rule[i].atom_accept_prob;
    if (value_rule[i].is_finite() && q > 0.0 && q < 1.0) ++fractional;
  }
  cap.check(inst.outcome_count() * std::ldexp(1.0, fractional),
            "coupling audit");

  CouplingAudit audit;
  for_each_outcome(inst, cap, [&](std::span<const double> x, double prob) {
    // Items sitting on a fractional atom branch on their coin.
    std::vector<int> branching;
    for (int i = 0; i < n; ++i) {
      const ItemThreshold& t = value_rule[i];
      if (x[i] == t.value && t.atom_accept_prob > 0.0 && t.atom_accept_prob < 1.0) {
        branching.push_back(i);
      }
    }
    std::vector<double> coins(n, 0.0);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << branching.size()); ++b) {
      double weight = prob;
      for (std::size_t j = 0; j < branching.size(); ++j) {
        const int i = branching[j];
        const double q = value_rule[i].atom_accept_prob;
        if (b >> j & 1) {
          coins[i] = 0.0;  // passes: 0 < q
          weight *= q;
        } else {
          coins[i] = q;  // fails: q is not < q
          weight *= 1.0 - q;
        }
      }
      const TrialReport original = execute_online(inst, value_rule, order, x, coins);
      WeightVector x_bernoulli(n, 0.0);
      for (int i = 0; i < n; ++i) {
        if (value_rule.passes(i, x[i], coins[i])) x_bernoulli[i] = reduced.t()[i];
      }
      const TrialReport relaxed =
          execute_online(bernoulli, bernoulli_rule, order, x_bernoulli, coins);
      ++audit.outcomes;
      if (original.accepted != relaxed.accepted) ++audit.set_mismatches;
      const double gap = original.alg_value - relaxed.alg_value;
      audit.min_pointwise_slack = std::min(audit.min_pointwise_slack, gap);
      if (gap < -check::kValueTolerance) ++audit.value_violations;
      audit.expected_value += weight * original.alg_value;
      audit.expected_bernoulli_value += weight * relaxed.alg_value;
    }
  });
  return audit;
}

std::vector<CheckResult> check_coupling(const ProphetInstance& inst,
                                        const BernoulliInstance& reduced,
                                        EnumerationCap cap) {
  const CouplingAudit a = audit_coupling(inst, reduced, cap);
  std::vector<CheckResult> rows;
  CheckResult items{check::kCouplingItems,
                    a.set_mismatches == 0 ? CheckStatus::kPass : CheckStatus::kFail,
                    -static_cast<double>(a.set_mismatches),
                    std::to_string(a.set_mismatches) + " of " +
                        std::to_string(a.outcomes) + " outcomes differ"};
  rows.push_back(std::move(items));
  rows.push_back(graded(check::kCouplingExpected,
                        a.expected_value - a.expected_bernoulli_value,
                        check::kValueTolerance,
                        "E[value view] = " + fmt(a.expected_value) +
                            ", E[Bernoulli view] = " +
                            fmt(a.expected_bernoulli_value)));
  CheckResult pointwise = graded(
      check::kCouplingPointwise, a.min_pointwise_slack, check::kValueTolerance,
      std::to_string(a.value_violations) + " of " + std::to_string(a.outcomes) +
          " outcomes have value view below Bernoulli view");
  rows.push_back(std::move(pointwise));
  return rows;
}

CheckResult check_orientation(const GraphicPlan& plan) {
  const double worst = plan.orientation.max_in_mass();
  return graded(check::kOrientation, 0.5 - worst, check::kMassTolerance,
                "max in-mass " + fmt(worst));
}

CheckResult check_incoming_blockage(const GraphicPlan& plan, EnumerationCap cap) {
  const GraphicMatroid& g = *plan.graph;
  const int m = g.size();
  double worst = 0.0;
  bool exhaustive = true;
  for (Element i = 0; i < m; ++i) {
    const int v = plan.orientation.head(i);
    const ElementSet out = plan.orientation.outgoing(v);
    std::vector<Element> candidates;
    for (Element e = 0; e < m; ++e) {
      if (e != i && !contains(out, e)) candidates.push_back(e);
    }
    // b_i is monotone in S, so the full candidate set is the worst case;
    // every subset is also checked when the budget allows.
    worst = std::max(worst, blocking_probability(g, plan.p_scaled, candidates, i, cap));
    const int k = static_cast<int>(candidates.size());
    if (k > 40 || !cap.allows(std::pow(3.0, k))) {
      exhaustive = false;
      continue;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      ElementSet s;
      for (int j = 0; j < k; ++j) {
        if (mask >> j & 1) s.push_back(candidates[j]);
      }
      worst = std::max(worst, blocking_probability(g, plan.p_scaled, s, i, cap));
    }
  }
  return graded(check::kBlockage, 0.5 - worst, check::kMassTolerance,
                "max b_i " + fmt(worst) +
                    (exhaustive ? " (all subsets)" : " (maximal sets only)"));
}

namespace {

double scaled_benchmark(const GraphicPlan& plan) {
  double total = 0.0;
  for (std::size_t i = 0; i < plan.p_scaled.size(); ++i) {
    total += plan.p_scaled[i] * plan.reduced.t()[i];
  }
  return total;
}

}  // namespace

CheckResult check_cut_bound(const GraphicPlan& plan, EnumerationCap cap) {
  const double bound = cut_bound_exact(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                       plan.orientation, cap);
  const double target = scaled_benchmark(plan) / 8.0;
  return graded(check::kCutBound, bound - target, check::kValueTolerance,
                "E_cut objective " + fmt(bound) + " vs " + fmt(target));
}

CheckResult check_derandomized_cut(const GraphicPlan& plan, EnumerationCap cap) {
  const double bound = cut_bound_exact(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                       plan.orientation, cap);
  const Cut cut = derandomize_cut(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                  plan.orientation, cap);
  const double value = cut_objective(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                     plan.orientation, cut, cap);
  return graded(check::kDerandomized, value - bound, check::kValueTolerance,
                "derandomized " + fmt(value) + " vs expected " + fmt(bound));
}

CheckResult check_graphic_ratio(const ProphetInstance& inst, const GraphicPlan& plan,
                                double opt, EnumerationCap cap) {
  const GraphicCutBuilder builder(inst, plan);
  const double value = expected_value_exact(
      inst, builder, OrderPolicy::worst_case(plan.reduced.t()), cap);
  const double ratio = opt > 0.0 ? value / opt : 1.0;
  return graded(check::kGraphicRatio, value - opt / 32.0, check::kValueTolerance,
                "E[Alg] = " + fmt(value) + ", Opt = " + fmt(opt) +
                    ", ratio " + fmt(ratio) + ", sum p t / 32 = " +
                    fmt(plan.reduced.benchmark() / 32.0));
}

CheckResult check_baseline_ratio(const ProphetInstance& inst,
                                 const BernoulliInstance& reduced, double opt,
                                 EnumerationCap cap) {
  const OrderPolicy order = OrderPolicy::worst_case(reduced.t());
  std::vector<std::pair<std::string, ThresholdRule>> rules;
  if (dynamic_cast<const UniformMatroid*>(&inst.matroid()) != nullptr) {
    rules.emplace_back("probabilistic",
                       kuniform_probabilistic_threshold(inst, cap).expand(inst.size()));
    rules.emplace_back("opt-fraction",
                       kuniform_opt_fraction_threshold(inst, opt, cap).expand(inst.size()));
  } else {
    rules.emplace_back("probabilistic",
                       partition_thresholds(inst, BaselineMethod::kProbabilistic, cap));
    rules.emplace_back("opt-fraction",
                       partition_thresholds(inst, BaselineMethod::kOptFraction, cap));
  }
  double slack = kInfinity;
  std::string detail;
  for (const auto& [name, rule] : rules) {
    const FixedRuleBuilder builder(name, rule);
    const double value = expected_value_exact(inst, builder, order, cap);
    slack = std::min(slack, value - opt / 2.0);
    detail += name + " " + fmt(value) + "; ";
  }
  detail += "Opt " + fmt(opt);
  return graded(check::kBaselineRatio, slack, check::kValueTolerance, std::move(detail));
}

CheckResult check_worst_case_order(const BernoulliInstance& reduced,
                                   EnumerationCap cap) {
  if (reduced.size() > 7) return skipped(check::kWorstOrder, "more than 7 items");
  const ProphetInstance bernoulli = reduced.as_prophet_instance();
  std::vector<std::pair<std::string, ThresholdRule>> rules;
  rules.emplace_back("all active", quantile_rule(bernoulli, reduced.p()));
  rules.emplace_back("quarter coins",
                     quantile_rule(bernoulli, scale(reduced.p(), kActivationScale)));
  if (dynamic_cast<const GraphicMatroid*>(&reduced.matroid()) != nullptr) {
    const GraphicPlan plan = plan_graphic(bernoulli, reduced);
    const Cut cut = derandomize_cut(*plan.graph, plan.p_scaled, reduced.t(),
                                    plan.orientation, cap);
    rules.emplace_back("derandomized cut", rule_for_cut(bernoulli, plan, cut));
  }
  const ArrivalOrder ascending{worst_case_order(reduced.t()), OrderTag::kWorstCase};
  double slack = kInfinity;
  std::string detail;
  for (const auto& [name, rule] : rules) {
    const double value = expected_value_fixed(bernoulli, rule, ascending, cap);
    const auto [order, minimum] =
        adversarial_order_search(bernoulli, rule, SearchMode::kExhaustive, cap);
    const double gap = minimum - value;
    if (gap < slack) slack = gap;
    if (gap < -check::kValueTolerance) {
      detail += name + ": order [";
      for (std::size_t j = 0; j < order.permutation.size(); ++j) {
        detail += (j ? "," : "") + std::to_string(order.permutation[j]);
      }
      detail += "] gives " + fmt(minimum) + " < " + fmt(value) + "; ";
    }
  }
  if (detail.empty()) detail = "no order beats t-ascending";
  return graded(check::kWorstOrder, slack, check::kValueTolerance, std::move(detail));
}

namespace {

// Runs `body`, mapping a cap overrun to SKIP and any other error to FAIL.
void guarded(std::vector<CheckResult>& out, const std::string& name,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const CapExceeded& e) {
    out.push_back(skipped(name, e.what()));
  } catch (const std::exception& e) {
    out.push_back({name, CheckStatus::kFail, -kInfinity, e.what()});
  }
}

}  // namespace

std::vector<CheckResult> verify_instance(const InstanceFile& file, EnumerationCap cap) {
  const ProphetInstance& inst = file.instance;
  std::vector<CheckResult> rows;

  std::optional<BernoulliInstance> reduced = file.reduction;
  if (!reduced) {
    try {
      ReductionOptions options;
      options.cap = cap;
      reduced = ex_ante_reduce(inst, options);
    } catch (const CapExceeded& e) {
      rows.push_back(skipped(check::kBenchmark, e.what()));
      return rows;
    }
  }
  std::optional<double> opt;
  try {
    opt = prophet_value_exact(inst, cap);
  } catch (const CapExceeded& e) {
    rows.push_back(skipped(check::kBenchmark, e.what()));
  }

  if (opt) rows.push_back(check_benchmark(*reduced, *opt));
  guarded(rows, check::kPolytope,
          [&] { rows.push_back(check_polytope(*reduced, cap)); });
  guarded(rows, check::kCouplingItems, [&] {
    for (auto& r : check_coupling(inst, *reduced, cap)) rows.push_back(std::move(r));
  });

  const bool graphic = dynamic_cast<const GraphicMatroid*>(&inst.matroid()) != nullptr;
  if (graphic) {
    std::optional<GraphicPlan> plan;
    guarded(rows, check::kOrientation, [&] {
      plan = plan_graphic(inst, *reduced);
      rows.push_back(check_orientation(*plan));
    });
    if (plan) {
      guarded(rows, check::kBlockage,
              [&] { rows.push_back(check_incoming_blockage(*plan, cap)); });
      guarded(rows, check::kCutBound,
              [&] { rows.push_back(check_cut_bound(*plan, cap)); });
      guarded(rows, check::kDerandomized,
              [&] { rows.push_back(check_derandomized_cut(*plan, cap)); });
      if (opt) {
        guarded(rows, check::kGraphicRatio,
                [&] { rows.push_back(check_graphic_ratio(inst, *plan, *opt, cap)); });
      }
    }
  } else if (opt) {
    guarded(rows, check::kBaselineRatio, [&] {
      rows.push_back(check_baseline_ratio(inst, *reduced, *opt, cap));
    });
  }
  guarded(rows, check::kWorstOrder,
          [&] { rows.push_back(check_worst_case_order(*reduced, cap)); });
  return rows;
}

bool SuiteReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SuiteRow& r) { return r.failed == 0; });
}

SuiteReport verify_suite(const std::filesystem::path& dir, EnumerationCap cap) {
  if (!std::filesystem::is_directory(dir)) {
    throw ValidationError(dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) throw ValidationError("no instances in " + dir.string());
  std::sort(files.begin(), files.end());

  SuiteReport report;
  std::map<std::string, std::size_t> index;
  for (const auto& path : files) {
    const InstanceFile file = load_instance(path);
    ++report.instances;
    for (const CheckResult& r : verify_instance(file, cap)) {
      auto [it, fresh] = index.emplace(r.name, report.rows.size());
      if (fresh) {
        SuiteRow fresh_row;
        fresh_row.name = r.name;
        report.rows.push_back(std::move(fresh_row));
      }
      SuiteRow& row = report.rows[it->second];
      switch (r.status) {
        case CheckStatus::kPass:
          ++row.passed;
          break;
        case CheckStatus::kFail:
          ++row.failed;
          if (row.first_failure.empty()) {
            row.first_failure = path.filename().string() + ": " + r.detail;
          }
          break;
        case CheckStatus::kSkip:
          ++row.skipped;
          break;
      }
      if (r.status != CheckStatus::kSkip) row.min_slack = std::min(row.min_slack, r.slack);
    }
  }
  return report;
}

void print_suite_report(const SuiteReport& report, std::ostream& out) {
  out << "instances: " << report.instances << '\n';
  out << std::left << std::setw(34) << "check" << std::setw(6) << "status"
      << std::right << std::setw(7) << "pass" << std::setw(7) << "fail"
      << std::setw(7) << "skip" << "  min slack\n";
  for (const SuiteRow& row : report.rows) {
    const bool ok = row.failed == 0;
    out << std::left << std::setw(34) << row.name << std::setw(6)
        << (ok ? (row.passed ? "PASS" : "SKIP") : "FAIL") << std::right
        << std::setw(7) << row.passed << std::setw(7) << row.failed << std::setw(7)
        << row.skipped << "  ";
    if (row.passed + row.failed == 0) {
      out << "-";
    } else {
      out << std::setprecision(6) << row.min_slack;
    }
    out << '\n';
    if (!ok) out << "    first failure: " << row.first_failure << '\n';
  }
}

}  // namespace prophet
