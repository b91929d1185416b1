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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "prophet/experiment.hpp"
#include "prophet/instance_io.hpp"
#include "test_util.hpp"

using namespace prophet;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("order policies") {
  const WeightVector t{3, 1, 2};
  CHECK(parse_order_policy("worst-case", t).tag() == OrderTag::kWorstCase);
  CHECK(parse_order_policy("random", t).is_random());
  const OrderPolicy e = parse_order_policy("explicit:2,0,1", t);
  CHECK(e.tag() == OrderTag::kExplicit);
  Rng rng = make_stream(1, 0);
  CHECK(e.draw(rng).permutation == std::vector<Element>{2, 0, 1});
  CHECK_THROWS_AS(parse_order_policy("explicit:0,0,1", t), ValidationError);
  CHECK_THROWS_AS(parse_order_policy("explicit:0,x,1", t), ValidationError);
  CHECK_THROWS_AS(parse_order_policy("sideways", t), ValidationError);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg.instance = "x.json";
  cfg.mode = RunMode::kMonteCarlo;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg.seed = 1;
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(parse_run_mode("fast"), ValidationError);
}

TEST_CASE("exact run writes a summary") {
  TempDir dir("prophet_exp_exact");
  save_instance(dir.path / "g.json", testing_util::small_graphic(5));
  for (auto algo : {Algorithm::kGraphicRandomCut, Algorithm::kGraphicDerandomized}) {
    ExperimentConfig cfg;
    cfg.instance = dir.path / "g.json";
    cfg.algorithm = algo;
    cfg.out = dir.path / "run";
    const ExperimentResult r = run_experiment(cfg);
    CHECK(r.summary.ratio >= 1.0 / 32);
    const auto j = nlohmann::json::parse(slurp(dir.path / "run.summary.json"));
    CHECK(j["ratio"] == r.summary.ratio);
    CHECK(j["diagnostics"].contains("p"));
    CHECK(j["diagnostics"].contains("t"));
    CHECK(j["diagnostics"]["orientation"].contains("in_mass"));
    CHECK(j["order"]["note"].get<std::string>().find("reduced t") != std::string::npos);
    if (algo == Algorithm::kGraphicDerandomized) {
      CHECK(j["diagnostics"].contains("consideration_set"));
      CHECK(j["diagnostics"]["cut"].contains("A"));
    }
    CHECK_FALSE(fs::exists(dir.path / "run.csv"));
  }
}

TEST_CASE("Monte Carlo CSV is byte-identical for a fixed seed") {
  TempDir dir("prophet_exp_mc");
  save_instance(dir.path / "g.json", testing_util::small_graphic(6));
  ExperimentConfig cfg;
  cfg.instance = dir.path / "g.json";
  cfg.mode = RunMode::kMonteCarlo;
  cfg.trials = 300;
  cfg.seed = 42;
  cfg.order = "random";
  cfg.out = dir.path / "a";
  const ExperimentResult a = run_experiment(cfg);
  cfg.out = dir.path / "b";
  run_experiment(cfg);
  const std::string csv = slurp(dir.path / "a.csv");
  CHECK(csv == slurp(dir.path / "b.csv"));
  CHECK(csv.rfind("trial,seed,order_tag,alg_value,prophet_value,ratio,accepted_edges,"
                  "degenerate\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 301);
  CHECK(a.summary.low_sample);
  CHECK(a.report["low_sample"] == true);
}

TEST_CASE("baseline algorithms run") {
  TempDir dir("prophet_exp_base");
  GeneratorSpec spec;
  spec.family = InstanceFamily::kUniform;
  spec.n = 4;
  spec.k = 1;
  save_instance(dir.path / "u.json", generate_instance(spec, 2));
  spec.family = InstanceFamily::kPartition;
  spec.blocks = {{0, 1}, {2, 3}};
  spec.capacities = {1, 1};
  save_instance(dir.path / "p.json", generate_instance(spec, 2));
  for (auto algo : {Algorithm::kSamuelCahn, Algorithm::kKUniformProbabilistic,
                    Algorithm::kKUniformOptFraction}) {
    ExperimentConfig cfg;
    cfg.instance = dir.path / "u.json";
    cfg.algorithm = algo;
    CHECK(run_experiment(cfg).summary.ratio >= 0.5 - 1e-9);
  }
  for (auto method : {BaselineMethod::kProbabilistic, BaselineMethod::kOptFraction}) {
    ExperimentConfig cfg;
    cfg.instance = dir.path / "p.json";
    cfg.algorithm = Algorithm::kPartition;
    cfg.partition_method = method;
    const ExperimentResult r = run_experiment(cfg);
    CHECK(r.summary.ratio >= 0.5 - 1e-9);
    CHECK(r.report["diagnostics"]["thresholds"].size() == 4);
  }
  ExperimentConfig wrong;
  wrong.instance = dir.path / "u.json";
  wrong.algorithm = Algorithm::kGraphicRandomCut;
  CHECK_THROWS_AS(run_experiment(wrong), ValidationError);
}

TEST_CASE("empty graph reports ratio one") {
  TempDir dir("prophet_exp_empty");
  const ProphetInstance inst(std::make_shared<GraphicMatroid>(2, std::vector<Edge>{}), {});
  save_instance(dir.path / "e.json", inst);
  ExperimentConfig cfg;
  cfg.instance = dir.path / "e.json";
  const ExperimentResult r = run_experiment(cfg);
  CHECK(r.summary.ratio == 1.0);
  CHECK(r.summary.degenerate);

  cfg.mode = RunMode::kMonteCarlo;
  cfg.seed = 1;
  cfg.trials = 20;
  cfg.out = dir.path / "e";
  const ExperimentResult m = run_experiment(cfg);
  CHECK(m.summary.ratio == 1.0);
  CHECK(m.summary.degenerate);
  const std::string csv = slurp(dir.path / "e.csv");
  CHECK(csv.find("\n0,") != std::string::npos);
  CHECK(csv.find(",1,,1\n") != std::string::npos);
}

TEST_CASE("cap overrun propagates in exact mode") {
  TempDir dir("prophet_exp_cap");
  save_instance(dir.path / "g.json", testing_util::small_graphic(5));
  ExperimentConfig cfg;
  cfg.instance = dir.path / "g.json";
  cfg.cap.max_outcomes = 2;
  CHECK_THROWS_AS(run_experiment(cfg), CapExceeded);
}

}  // TEST_SUITE
