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

#include "prophet/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "prophet/instance_io.hpp"

namespace prophet {

using nlohmann::json;

namespace {

constexpr std::uint64_t kReductionStream = 0x7265647563650000ULL;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json threshold_json(const ItemThreshold& t) {
  json j;
  if (t.is_finite()) {
    j["value"] = t.value;
  } else {
    j["value"] = "inf";
  }
  j["atom_accept_prob"] = t.atom_accept_prob;
  return j;
}

json rule_json(const ThresholdRule& rule) {
  json out = json::array();
  for (const ItemThreshold& t : rule.items()) out.push_back(threshold_json(t));
  return out;
}

}  // namespace

RunMode parse_run_mode(const std::string& name) {
  if (name == "exact") return RunMode::kExact;
  if (name == "mc") return RunMode::kMonteCarlo;
  throw ValidationError("unknown mode '" + name + "' (expected exact or mc)");
}

void ExperimentConfig::validate() const {
  if (instance.empty()) throw ValidationError("an instance file is required");
  if (mode == RunMode::kMonteCarlo) {
    if (!seed) throw ValidationError("a seed is required in mc mode");
    if (trials == 0) throw ValidationError("mc mode needs at least one trial");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ValidationError("confidence level must lie in (0, 1)");
  }
}

OrderPolicy parse_order_policy(const std::string& spec,
                               std::span<const double> reduced_t) {
  const int n = static_cast<int>(reduced_t.size());
  if (spec == "worst-case") return OrderPolicy::worst_case(reduced_t);
  if (spec == "random") return OrderPolicy::uniformly_random(n);
  const std::string prefix = "explicit:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<Element> perm;
    std::stringstream in(spec.substr(prefix.size()));
    std::string token;
    while (std::getline(in, token, ',')) {
      try {
        std::size_t used = 0;
        perm.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ValidationError("bad element index '" + token + "' in order");
      }
    }
    ArrivalOrder{perm, OrderTag::kExplicit}.validate(n);
    return OrderPolicy::fixed(std::move(perm), OrderTag::kExplicit);
  }
  throw ValidationError("unknown order '" + spec +
                        "' (expected worst-case, random or explicit:i,j,...)");
}

std::uint64_t reduction_seed(std::uint64_t seed) {
  return stream_seed(seed, kReductionStream);
}

ReductionOptions reduction_options(const ProphetInstance& inst,
                                   ReductionChoice choice, std::uint64_t trials,
                                   std::uint64_t seed, EnumerationCap cap) {
  ReductionOptions options;
  options.cap = cap;
  options.trials = trials;
  options.seed = reduction_seed(seed);
  const bool exact = choice == ReductionChoice::kExact ||
                     (choice == ReductionChoice::kAuto &&
                      cap.allows(inst.outcome_count()));
  options.mode = exact ? ReductionMode::kExact : ReductionMode::kMonteCarlo;
  return options;
}

json reduction_report(const BernoulliInstance& reduced) {
  return {{"p", reduced.p()},
          {"t", reduced.t()},
          {"benchmark", reduced.benchmark()},
          {"worst_case_order", worst_case_order(reduced)}};
}

json orientation_report(const GraphicPlan& plan) {
  json arcs = json::array();
  for (const DirectedEdge& a : plan.orientation.arcs()) arcs.push_back({a.tail, a.head});
  return {{"p_scaled", plan.p_scaled},
          {"arcs", arcs},
          {"in_mass", plan.orientation.in_mass()},
          {"max_in_mass", plan.orientation.max_in_mass()}};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const InstanceFile file = load_instance(cfg.instance);
  const ProphetInstance& inst = file.instance;
  const bool mc = cfg.mode == RunMode::kMonteCarlo;
  const std::uint64_t seed = cfg.seed.value_or(0);

  SetupOptions options;
  options.reduction =
      reduction_options(inst, cfg.reduction, cfg.reduction_trials, seed, cfg.cap);
  options.partition_method = cfg.partition_method;

  std::optional<double> opt;
  if (cfg.cap.allows(inst.outcome_count())) {
    opt = prophet_value_exact(inst, cfg.cap);
  } else if (!mc) {
    cfg.cap.check(inst.outcome_count(), "exact prophet value");
  }
  if (!opt && cfg.algorithm == Algorithm::kKUniformOptFraction) {
    options.opt = prophet_value_mc(inst, cfg.reduction_trials, reduction_seed(seed)).mean;
  } else {
    options.opt = opt;
  }

  AlgorithmSetup setup =
      file.reduction ? make_setup(inst, cfg.algorithm, *file.reduction, options)
                     : make_setup(inst, cfg.algorithm, options);

  const OrderPolicy policy = parse_order_policy(cfg.order, setup.reduced.t());

  ExperimentResult result;
  if (mc) {
    std::ofstream csv;
    const bool write_csv = !cfg.out.empty();
    if (write_csv) {
      const auto path = std::filesystem::path(cfg.out.string() + ".csv");
      csv.open(path);
      if (!csv) throw std::runtime_error("cannot write " + path.string());
      csv << "trial,seed,order_tag,alg_value,prophet_value,ratio,accepted_edges,"
             "degenerate\n";
    }
    auto sink = [&](std::uint64_t j, const TrialReport& r) {
      if (!write_csv) return;
      const bool degenerate = r.prophet_value <= 0.0;
      const double ratio = degenerate ? 1.0 : r.alg_value / r.prophet_value;
      std::string accepted;
      for (std::size_t k = 0; k < r.accepted.size(); ++k) {
        if (k) accepted += ';';
        accepted += inst.matroid().label(r.accepted[k]);
      }
      csv << j << ',' << r.seed << ',' << to_string(r.order.tag) << ','
          << format_double(r.alg_value) << ',' << format_double(r.prophet_value)
          << ',' << format_double(ratio) << ',' << accepted << ','
          << (degenerate ? 1 : 0) << '\n';
    };
    result.summary = monte_carlo_ratio(inst, *setup.builder, policy, cfg.trials, seed,
                                       cfg.confidence, sink);
    if (write_csv && !csv) throw std::runtime_error("CSV write failed");
  } else {
    RatioSummary& s = result.summary;
    s.mean_alg = expected_value_exact(inst, *setup.builder, policy, cfg.cap);
    s.mean_prophet = *opt;
    s.confidence = cfg.confidence;
    if (s.mean_prophet <= 0.0) {
      s.degenerate = true;
      s.ratio = 1.0;
    } else {
      s.ratio = s.mean_alg / s.mean_prophet;
    }
  }

  const RatioSummary& s = result.summary;
  json report = {
      {"format", "prophet-summary"},
      {"version", 1},
      {"instance", cfg.instance.string()},
      {"algorithm", to_string(cfg.algorithm)},
      {"mode", mc ? "mc" : "exact"},
      {"ratio", s.ratio},
      {"mean_alg", s.mean_alg},
      {"mean_prophet", s.mean_prophet},
      {"half_width", s.half_width},
      {"ci_low", s.ratio - s.half_width},
      {"ci_high", s.ratio + s.half_width},
      {"confidence", s.confidence},
      {"trials", mc ? s.trials : 0},
      {"degenerate", s.degenerate},
      {"low_sample", mc && s.low_sample},
  };
  if (mc) report["seed"] = seed;
  if (opt) report["prophet_exact"] = *opt;
  json order = {{"policy", cfg.order}, {"tag", to_string(policy.tag())}};
  if (policy.tag() == OrderTag::kWorstCase) {
    order["note"] = "worst-case order sorts items by the reduced t-vector";
  }
  report["order"] = order;

  json diag = reduction_report(setup.reduced);
  diag["reduction"] = file.reduction ? "pinned"
                      : options.reduction.mode == ReductionMode::kExact
                          ? "exact"
                          : "monte-carlo";
  if (setup.graphic) {
    const GraphicPlan& plan = *setup.graphic;
    diag["orientation"] = orientation_report(plan);
    if (setup.derandomized_cut) {
      const Cut& cut = *setup.derandomized_cut;
      diag["cut"] = {{"A", cut.side_a()}, {"B", cut.side_b()}};
      diag["consideration_set"] = consideration_set(plan.orientation, cut);
      diag["cut_objective"] = cut_objective(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                            plan.orientation, cut, cfg.cap);
    } else {
      diag["cut"] = "uniform random per trial";
    }
    try {
      diag["cut_bound"] = cut_bound_exact(*plan.graph, plan.p_scaled, plan.reduced.t(),
                                          plan.orientation, cfg.cap);
    } catch (const CapExceeded& e) {
      diag["cut_bound"] = std::string("skipped: ") + e.what();
    }
  }
  if (setup.uniform) {
    diag["threshold"] = threshold_json(setup.uniform->threshold);
    diag["capacity"] = setup.uniform->capacity;
    diag["threshold_degenerate"] = setup.uniform->degenerate;
    if (!setup.uniform->note.empty()) diag["threshold_note"] = setup.uniform->note;
  } else if (cfg.algorithm != Algorithm::kGraphicRandomCut) {
    diag["thresholds"] = rule_json(setup.builder->enumerate(cfg.cap).front().rule);
  }
  report["diagnostics"] = diag;
  result.report = report;

  if (!cfg.out.empty()) {
    const auto path = std::filesystem::path(cfg.out.string() + ".summary.json");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << report.dump(2) << '\n';
  }
  return result;
}

}  // namespace prophet
