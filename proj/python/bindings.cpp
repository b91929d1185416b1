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

// Python bindings. Instances cross the boundary as plain dicts in the
// instance-file layout; results come back as dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "prophet/algorithms.hpp"
#include "prophet/experiment.hpp"
#include "prophet/instance_io.hpp"
#include "prophet/verification.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace prophet;

namespace {

json to_json(const py::handle& obj) {
  const auto dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(obj).cast<std::string>());
}

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

EnumerationCap cap_of(std::optional<std::uint64_t> cap) {
  EnumerationCap c = EnumerationCap::from_env();
  if (cap) c.max_outcomes = *cap;
  return c;
}

InstanceFile parse(const py::handle& instance) { return instance_from_json(to_json(instance)); }

py::object generate(const std::string& family, int vertices, int edges, bool simple, int n,
                    int k, std::vector<ElementSet> blocks, std::vector<int> capacities,
                    const std::string& dist, int support, int max_value,
                    std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = parse_family(family);
  spec.vertices = vertices;
  spec.edges = edges;
  spec.parallel_edges = !simple;
  spec.n = n;
  spec.k = k;
  spec.blocks = std::move(blocks);
  spec.capacities = std::move(capacities);
  spec.distribution = parse_distribution_family(dist);
  spec.support_size = support;
  spec.max_value = max_value;
  return to_py(instance_to_json(generate_instance(spec, seed)));
}

py::object reduce(const py::handle& instance, const std::string& mode,
                  std::uint64_t trials, std::uint64_t seed,
                  std::optional<std::uint64_t> cap) {
  const InstanceFile f = parse(instance);
  ReductionChoice choice = ReductionChoice::kAuto;
  if (mode == "exact") {
    choice = ReductionChoice::kExact;
  } else if (mode == "mc") {
    choice = ReductionChoice::kMonteCarlo;
  } else if (mode != "auto") {
    throw ValidationError("reduction mode must be exact, mc or auto");
  }
  const EnumerationCap c = cap_of(cap);
  const BernoulliInstance reduced =
      ex_ante_reduce(f.instance, reduction_options(f.instance, choice, trials, seed, c));
  return to_py(reduction_report(reduced));
}

double expected_value(const py::handle& instance, const std::string& algorithm,
                      const std::string& order, const std::string& partition_method,
                      std::optional<std::uint64_t> cap) {
  const InstanceFile f = parse(instance);
  SetupOptions options;
  options.reduction.cap = cap_of(cap);
  options.partition_method = partition_method == "opt-fraction"
                                 ? BaselineMethod::kOptFraction
                                 : BaselineMethod::kProbabilistic;
  const Algorithm algo = parse_algorithm(algorithm);
  const AlgorithmSetup setup = f.reduction ? make_setup(f.instance, algo, *f.reduction, options)
                                           : make_setup(f.instance, algo, options);
  const OrderPolicy policy = parse_order_policy(order, setup.reduced.t());
  if (policy.is_random()) throw ValidationError("exact evaluation needs a fixed order");
  return expected_value_exact(f.instance, *setup.builder, policy, options.reduction.cap);
}

py::object run(const std::string& instance_path, const std::string& algorithm,
               const std::string& mode, std::uint64_t trials, std::optional<std::uint64_t> seed,
               const std::string& order, const std::string& out, const std::string& reduction,
               std::optional<std::uint64_t> cap) {
  ExperimentConfig cfg;
  cfg.instance = instance_path;
  cfg.algorithm = parse_algorithm(algorithm);
  cfg.mode = parse_run_mode(mode);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.order = order;
  cfg.out = out;
  cfg.cap = cap_of(cap);
  if (reduction == "exact") {
    cfg.reduction = ReductionChoice::kExact;
  } else if (reduction == "mc") {
    cfg.reduction = ReductionChoice::kMonteCarlo;
  } else if (reduction != "auto") {
    throw ValidationError("reduction mode must be exact, mc or auto");
  }
  return to_py(run_experiment(cfg).report);
}

py::list verify(const py::handle& instance, std::optional<std::uint64_t> cap) {
  py::list rows;
  for (const CheckResult& r : verify_instance(parse(instance), cap_of(cap))) {
    py::dict row;
    row["name"] = r.name;
    row["status"] = to_string(r.status);
    row["slack"] = r.slack;
    row["detail"] = r.detail;
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Threshold algorithms for matroid prophet inequalities";
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("generate", &generate, py::arg("family") = "random-graph", py::arg("vertices") = 4,
        py::arg("edges") = 5, py::arg("simple") = false, py::arg("n") = 3, py::arg("k") = 1,
        py::arg("blocks") = std::vector<ElementSet>{},
        py::arg("capacities") = std::vector<int>{}, py::arg("dist") = "per-item",
        py::arg("support") = 3, py::arg("max_value") = 10, py::arg("seed") = 0,
        "Random instance as a dict in the instance-file layout.");
  m.def(
      "prophet_value",
      [](const py::handle& instance, std::optional<std::uint64_t> cap) {
        return prophet_value_exact(parse(instance).instance, cap_of(cap));
      },
      py::arg("instance"), py::arg("cap") = py::none(),
      "Exact expected offline optimum.");
  m.def("reduce", &reduce, py::arg("instance"), py::arg("mode") = "auto",
        py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("cap") = py::none(),
        "Ex-ante reduction: p, t, benchmark and the worst-case order.");
  m.def(
      "max_weight_basis",
      [](const py::handle& matroid, const std::vector<double>& weights) {
        return max_weight_basis(*matroid_from_json(to_json(matroid)), weights);
      },
      py::arg("matroid"), py::arg("weights"));
  m.def(
      "is_independent",
      [](const py::handle& matroid, const ElementSet& s) {
        return matroid_from_json(to_json(matroid))->is_independent(s);
      },
      py::arg("matroid"), py::arg("items"));
  m.def("expected_value", &expected_value, py::arg("instance"),
        py::arg("algorithm") = "graphic-random-cut", py::arg("order") = "worst-case",
        py::arg("partition_method") = "probabilistic", py::arg("cap") = py::none(),
        "Exact expected online value of an algorithm under a fixed order.");
  m.def("run", &run, py::arg("instance_path"), py::arg("algorithm") = "graphic-random-cut",
        py::arg("mode") = "exact", py::arg("trials") = 10000, py::arg("seed") = py::none(),
        py::arg("order") = "worst-case", py::arg("out") = "", py::arg("reduction") = "auto",
        py::arg("cap") = py::none(), "Runs an experiment and returns its summary.");
  m.def("verify", &verify, py::arg("instance"), py::arg("cap") = py::none(),
        "Guarantee checks for one instance.");
}
