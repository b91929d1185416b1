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

// prophet: command-line front end.
//
// Exit codes: 0 success, 1 validation or I/O error, 2 enumeration cap
// exceeded, 3 verification failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prophet/experiment.hpp"
#include "prophet/graphic_prophet.hpp"
#include "prophet/instance_io.hpp"
#include "prophet/verification.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace prophet;

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kCap = 2, kVerifyFailed = 3 };

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, sep)) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ValidationError("not an integer: '" + token + "'");
    }
  }
  return out;
}

EnumerationCap cap_from(const std::optional<std::uint64_t>& flag) {
  EnumerationCap cap = EnumerationCap::from_env();
  if (flag) cap.max_outcomes = *flag;
  return cap;
}

struct GenArgs {
  std::string family = "random-graph";
  GeneratorSpec spec;
  bool simple = false;
  std::string blocks;
  std::string capacities;
  std::string distribution = "per-item";
  std::uint64_t seed = 0;
  int count = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  GeneratorSpec spec = a.spec;
  spec.family = parse_family(a.family);
  spec.distribution = parse_distribution_family(a.distribution);
  spec.parallel_edges = !a.simple;
  if (spec.family == InstanceFamily::kPartition) {
    std::stringstream in(a.blocks);
    std::string block;
    while (std::getline(in, block, ';')) {
      const std::vector<int> members = parse_ints(block, ',');
      spec.blocks.emplace_back(members.begin(), members.end());
    }
    spec.capacities = parse_ints(a.capacities, ',');
  }
  if (a.count < 1) throw ValidationError("--count must be >= 1");
  if (a.count == 1) {
    const ProphetInstance inst = generate_instance(spec, a.seed);
    if (a.out.empty()) {
      std::cout << instance_to_json(inst).dump(2) << '\n';
    } else {
      save_instance(a.out, inst);
    }
    return kOk;
  }
  if (a.out.empty()) throw ValidationError("--count > 1 needs --out <directory>");
  fs::create_directories(a.out);
  for (int j = 0; j < a.count; ++j) {
    const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(j);
    char name[64];
    std::snprintf(name, sizeof name, "instance_%03d.json", j);
    save_instance(fs::path(a.out) / name, generate_instance(spec, seed));
  }
  return kOk;
}

struct RunArgs {
  ExperimentConfig cfg;
  std::string algo = "graphic-random-cut";
  std::string method = "probabilistic";
  std::string mode = "exact";
  std::string reduction = "auto";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
  std::string out;
};

int run_run(RunArgs a) {
  ExperimentConfig cfg = a.cfg;
  cfg.algorithm = parse_algorithm(a.algo);
  if (a.method == "probabilistic") {
    cfg.partition_method = BaselineMethod::kProbabilistic;
  } else if (a.method == "opt-fraction") {
    cfg.partition_method = BaselineMethod::kOptFraction;
  } else {
    throw ValidationError("unknown partition method '" + a.method + "'");
  }
  cfg.mode = parse_run_mode(a.mode);
  if (a.reduction == "auto") {
    cfg.reduction = ReductionChoice::kAuto;
  } else if (a.reduction == "exact") {
    cfg.reduction = ReductionChoice::kExact;
  } else if (a.reduction == "mc") {
    cfg.reduction = ReductionChoice::kMonteCarlo;
  } else {
    throw ValidationError("unknown reduction mode '" + a.reduction + "'");
  }
  cfg.seed = a.seed;
  cfg.cap = cap_from(a.cap);
  cfg.out = a.out;
  const ExperimentResult result = run_experiment(cfg);
  json brief = {{"algorithm", result.report["algorithm"]},
                {"mode", result.report["mode"]},
                {"ratio", result.report["ratio"]},
                {"half_width", result.report["half_width"]},
                {"mean_alg", result.report["mean_alg"]},
                {"mean_prophet", result.report["mean_prophet"]},
                {"degenerate", result.report["degenerate"]}};
  if (result.summary.low_sample && cfg.mode == RunMode::kMonteCarlo) {
    std::cerr << "warning: fewer than " << RatioSummary::kRecommendedTrials
              << " trials; the confidence interval is unreliable\n";
  }
  std::cout << (a.out.empty() ? result.report : brief).dump(2) << '\n';
  return kOk;
}

int run_verify(const std::string& target, const std::optional<std::uint64_t>& cap_flag) {
  const EnumerationCap cap = cap_from(cap_flag);
  if (fs::is_directory(target)) {
    const SuiteReport report = verify_suite(target, cap);
    print_suite_report(report, std::cout);
    return report.all_passed() ? kOk : kVerifyFailed;
  }
  const InstanceFile file = load_instance(target);
  bool ok = true;
  for (const CheckResult& r : verify_instance(file, cap)) {
    std::cout << to_string(r.status) << "  " << r.name << "  slack=" << r.slack
              << "  " << r.detail << '\n';
    ok = ok && r.status != CheckStatus::kFail;
  }
  return ok ? kOk : kVerifyFailed;
}

struct ReduceArgs {
  std::string instance;
  std::string mode = "exact";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> cap;
  std::string out;
};

BernoulliInstance reduce_from(const ReduceArgs& a, const InstanceFile& file) {
  ReductionChoice choice;
  if (a.mode == "exact") {
    choice = ReductionChoice::kExact;
  } else if (a.mode == "mc") {
    choice = ReductionChoice::kMonteCarlo;
  } else if (a.mode == "auto") {
    choice = ReductionChoice::kAuto;
  } else {
    throw ValidationError("unknown reduction mode '" + a.mode + "'");
  }
  return ex_ante_reduce(
      file.instance,
      reduction_options(file.instance, choice, a.trials, a.seed, cap_from(a.cap)));
}

int run_reduce(const ReduceArgs& a) {
  const InstanceFile file = load_instance(a.instance);
  const BernoulliInstance reduced = reduce_from(a, file);
  json report = reduction_report(reduced);
  const EnumerationCap cap = cap_from(a.cap);
  if (cap.allows(file.instance.outcome_count())) {
    report["prophet_exact"] = prophet_value_exact(file.instance, cap);
  }
  if (reduced.size() <= 20) {
    const PolytopeCheck pc = polytope_check(reduced.matroid(), reduced.p(), cap);
    report["in_polytope"] = pc.member;
    report["max_violation"] = pc.max_violation;
  }
  std::cout << report.dump(2) << '\n';
  if (!a.out.empty()) save_instance(a.out, file.instance, &reduced);
  return kOk;
}

int run_orient(const ReduceArgs& a) {
  const InstanceFile file = load_instance(a.instance);
  const BernoulliInstance reduced =
      file.reduction ? *file.reduction : reduce_from(a, file);
  const GraphicPlan plan = plan_graphic(file.instance, reduced);
  json report = orientation_report(plan);
  report["vertices"] = plan.graph->vertices();
  std::cout << report.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-adaptive threshold algorithms for matroid prophet inequalities"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instance files");
  gen_cmd->add_option("--family", gen.family, "random-graph | uniform | partition")
      ->capture_default_str();
  gen_cmd->add_option("--vertices", gen.spec.vertices, "Graph vertices")
      ->capture_default_str();
  gen_cmd->add_option("--edges", gen.spec.edges, "Graph edges")->capture_default_str();
  gen_cmd->add_flag("--simple", gen.simple, "Forbid parallel edges");
  gen_cmd->add_option("--n", gen.spec.n, "Uniform matroid size")->capture_default_str();
  gen_cmd->add_option("--k", gen.spec.k, "Uniform matroid rank")->capture_default_str();
  gen_cmd->add_option("--blocks", gen.blocks, "Partition blocks, e.g. 0,1;2,3");
  gen_cmd->add_option("--capacities", gen.capacities, "Block capacities, e.g. 1,1");
  gen_cmd->add_option("--dist", gen.distribution, "iid-discrete | per-item")
      ->capture_default_str();
  gen_cmd->add_option("--support", gen.spec.support_size, "Support size (maximum for per-item)")
      ->capture_default_str();
  gen_cmd->add_option("--max-value", gen.spec.max_value, "Largest support value")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--count", gen.count,
                      "Number of instances; above 1, --out names a directory")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when omitted)");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one experiment");
  run_cmd->add_option("--instance", run.cfg.instance, "Instance file")->required();
  run_cmd->add_option("--algo", run.algo,
                      "graphic-random-cut | graphic-derandomized | samuel-cahn | "
                      "kuniform-prob | kuniform-optfrac | partition")
      ->capture_default_str();
  run_cmd->add_option("--partition-method", run.method, "probabilistic | opt-fraction")
      ->capture_default_str();
  run_cmd->add_option("--mode", run.mode, "exact | mc")->capture_default_str();
  run_cmd->add_option("--trials", run.cfg.trials, "Monte Carlo trials")
      ->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Seed (required in mc mode)");
  run_cmd->add_option("--order", run.cfg.order, "worst-case | random | explicit:i,j,...")
      ->capture_default_str();
  run_cmd->add_option("--out", run.out,
                      "Output prefix for <out>.summary.json and <out>.csv");
  run_cmd->add_option("--cap", run.cap, "Enumeration cap (outcomes)");
  run_cmd->add_option("--confidence", run.cfg.confidence, "Confidence level")
      ->capture_default_str();
  run_cmd->add_option("--reduction", run.reduction, "auto | exact | mc")
      ->capture_default_str();
  run_cmd->add_option("--reduction-trials", run.cfg.reduction_trials,
                      "Samples for a Monte Carlo reduction")
      ->capture_default_str();

  std::string verify_target;
  std::optional<std::uint64_t> verify_cap;
  auto* verify_cmd = app.add_subcommand("verify", "Check guarantees on an instance or suite");
  verify_cmd->add_option("--instance", verify_target, "Instance file or directory")
      ->required();
  verify_cmd->add_option("--cap", verify_cap, "Enumeration cap (outcomes)");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Print the Bernoulli reduction");
  ReduceArgs orient;
  auto* orient_cmd = app.add_subcommand("orient", "Print the low in-mass orientation");
  for (auto [cmd, args] : {std::pair{reduce_cmd, &reduce}, std::pair{orient_cmd, &orient}}) {
    cmd->add_option("--instance", args->instance, "Instance file")->required();
    cmd->add_option("--mode", args->mode, "Reduction: exact | mc | auto")
        ->capture_default_str();
    cmd->add_option("--trials", args->trials, "Samples in mc mode")->capture_default_str();
    cmd->add_option("--seed", args->seed, "Seed in mc mode")->capture_default_str();
    cmd->add_option("--cap", args->cap, "Enumeration cap (outcomes)");
  }
  reduce_cmd->add_option("--out", reduce.out, "Write the instance with the reduction embedded");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*run_cmd) return run_run(run);
    if (*verify_cmd) return run_verify(verify_target, verify_cap);
    if (*reduce_cmd) return run_reduce(reduce);
    if (*orient_cmd) return run_orient(orient);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
