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

#include "prophet/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

namespace prophet {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::string> labels_of(const Matroid& m) { return m.labels(); }

}  // namespace

json matroid_to_json(const Matroid& m) {
  if (const auto* g = dynamic_cast<const GraphicMatroid*>(&m)) {
    json edges = json::array();
    for (const Edge& e : g->edges()) edges.push_back({e.u, e.v});
    return {{"type", "graphic"}, {"vertices", g->vertices()}, {"edges", edges}};
  }
  if (const auto* u = dynamic_cast<const UniformMatroid*>(&m)) {
    return {{"type", "uniform"}, {"n", u->size()}, {"k", u->capacity()}};
  }
  if (const auto* p = dynamic_cast<const PartitionMatroid*>(&m)) {
    return {{"type", "partition"},
            {"blocks", p->blocks()},
            {"capacities", p->capacities()}};
  }
  throw ValidationError("unsupported matroid kind " + m.kind());
}

namespace {

MatroidPtr matroid_from_json(const json& j, std::vector<std::string> labels) {
  const auto type = field<std::string>(j, "type");
  if (type == "graphic") {
    std::vector<Edge> edges;
    for (const auto& pair : field<std::vector<std::vector<int>>>(j, "edges")) {
      if (pair.size() != 2) throw ValidationError("edges must be vertex pairs");
      edges.push_back({pair[0], pair[1]});
    }
    return std::make_shared<GraphicMatroid>(field<int>(j, "vertices"),
                                            std::move(edges), std::move(labels));
  }
  if (type == "uniform") {
    return std::make_shared<UniformMatroid>(field<int>(j, "n"), field<int>(j, "k"),
                                            std::move(labels));
  }
  if (type == "partition") {
    return std::make_shared<PartitionMatroid>(
        field<std::vector<ElementSet>>(j, "blocks"),
        field<std::vector<int>>(j, "capacities"), std::move(labels));
  }
  throw ValidationError("unknown matroid type '" + type + "'");
}

}  // namespace

MatroidPtr matroid_from_json(const json& j) { return matroid_from_json(j, {}); }

json instance_to_json(const ProphetInstance& inst,
                      const BernoulliInstance* reduction) {
  json dists = json::array();
  for (const auto& d : inst.dists()) {
    dists.push_back({{"support", d.support()}, {"probs", d.probs()}});
  }
  json out = {{"format", "prophet-instance"},
              {"version", kInstanceFormatVersion},
              {"matroid", matroid_to_json(inst.matroid())},
              {"distributions", dists}};
  if (!inst.matroid().labels().empty()) out["labels"] = labels_of(inst.matroid());
  if (reduction != nullptr) {
    out["reduction"] = {{"p", reduction->p()}, {"t", reduction->t()}};
  }
  return out;
}

InstanceFile instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance document must be an object");
  const int version = field<int>(j, "version");
  if (version != kInstanceFormatVersion) {
    throw ValidationError("unsupported instance version " + std::to_string(version));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  MatroidPtr matroid = matroid_from_json(field<json>(j, "matroid"), std::move(labels));

  std::vector<DiscreteDistribution> dists;
  const auto raw = field<json>(j, "distributions");
  if (!raw.is_array()) throw ValidationError("'distributions' must be an array");
  for (const auto& d : raw) {
    dists.emplace_back(field<std::vector<double>>(d, "support"),
                       field<std::vector<double>>(d, "probs"),
                       kFileProbabilityTolerance);
  }
  ProphetInstance inst(std::move(matroid), std::move(dists));
  std::optional<BernoulliInstance> reduction;
  if (j.contains("reduction")) {
    const auto& r = j.at("reduction");
    reduction.emplace(inst.matroid_ptr(), field<WeightVector>(r, "p"),
                      field<WeightVector>(r, "t"));
  }
  return {std::move(inst), std::move(reduction)};
}

InstanceFile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const std::filesystem::path& path, const ProphetInstance& inst,
                   const BernoulliInstance* reduction) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << instance_to_json(inst, reduction).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

InstanceFamily parse_family(const std::string& name) {
  if (name == "random-graph") return InstanceFamily::kRandomGraph;
  if (name == "uniform") return InstanceFamily::kUniform;
  if (name == "partition") return InstanceFamily::kPartition;
  throw ValidationError("unknown instance family '" + name + "'");
}

DistributionFamily parse_distribution_family(const std::string& name) {
  if (name == "iid-discrete") return DistributionFamily::kIidDiscrete;
  if (name == "per-item") return DistributionFamily::kPerItemRandom;
  throw ValidationError("unknown distribution family '" + name + "'");
}

namespace {

DiscreteDistribution random_distribution(int support_size, int max_value, Rng& rng) {
  // Distinct values by partial Fisher-Yates over 0..max_value.
  std::vector<int> pool(max_value + 1);
  for (int v = 0; v <= max_value; ++v) pool[v] = v;
  std::vector<double> support;
  for (int j = 0; j < support_size; ++j) {
    const auto pick = j + uniform_below(rng, pool.size() - j);
    std::swap(pool[j], pool[pick]);
    support.push_back(pool[j]);
  }
  std::sort(support.begin(), support.end());
  std::vector<double> probs(support_size);
  double total = 0.0;
  for (double& p : probs) {
    p = 0.05 + uniform01(rng);
    total += p;
  }
  for (double& p : probs) p /= total;
  return DiscreteDistribution(std::move(support), std::move(probs),
                              kFileProbabilityTolerance);
}

MatroidPtr random_graph(const GeneratorSpec& spec, Rng& rng) {
  if (spec.vertices < 2) throw ValidationError("random graph needs >= 2 vertices");
  if (spec.edges <= 0) throw ValidationError("random graph needs >= 1 edge");
  const long long simple_pairs =
      static_cast<long long>(spec.vertices) * (spec.vertices - 1) / 2;
  if (!spec.parallel_edges && spec.edges > simple_pairs) {
    throw ValidationError("too many edges for a simple graph on " +
                          std::to_string(spec.vertices) + " vertices");
  }
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  while (static_cast<int>(edges.size()) < spec.edges) {
    int u = static_cast<int>(uniform_below(rng, spec.vertices));
    int v = static_cast<int>(uniform_below(rng, spec.vertices - 1));
    if (v >= u) ++v;
    if (!spec.parallel_edges && !used.insert({std::min(u, v), std::max(u, v)}).second) {
      continue;
    }
    edges.push_back({u, v});
  }
  return std::make_shared<GraphicMatroid>(spec.vertices, std::move(edges));
}

}  // namespace

ProphetInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  MatroidPtr matroid;
  switch (spec.family) {
    case InstanceFamily::kRandomGraph:
      matroid = random_graph(spec, rng);
      break;
    case InstanceFamily::kUniform:
      if (spec.n <= 0) throw ValidationError("uniform family needs n >= 1");
      if (spec.k < 0 || spec.k > spec.n) {
        throw ValidationError("uniform family needs 0 <= k <= n");
      }
      matroid = std::make_shared<UniformMatroid>(spec.n, spec.k);
      break;
    case InstanceFamily::kPartition:
      if (spec.blocks.empty()) throw ValidationError("partition needs blocks");
      matroid = std::make_shared<PartitionMatroid>(spec.blocks, spec.capacities);
      break;
  }
  if (spec.support_size < 1) throw ValidationError("support size must be >= 1");
  if (spec.max_value + 1 < spec.support_size) {
    throw ValidationError("value range too small for the support size");
  }
  std::vector<DiscreteDistribution> dists;
  if (spec.distribution == DistributionFamily::kIidDiscrete) {
    const DiscreteDistribution shared =
        random_distribution(spec.support_size, spec.max_value, rng);
    dists.assign(matroid->size(), shared);
  } else {
    for (int i = 0; i < matroid->size(); ++i) {
      const int size = 1 + static_cast<int>(uniform_below(rng, spec.support_size));
      dists.push_back(random_distribution(size, spec.max_value, rng));
    }
  }
  return ProphetInstance(std::move(matroid), std::move(dists));
}

}  // namespace prophet
