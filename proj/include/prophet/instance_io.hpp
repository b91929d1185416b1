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

// Instance files are JSON documents:
//
//   {
//     "format": "prophet-instance",
//     "version": 1,
//     "matroid": {"type": "graphic", "vertices": 4, "edges": [[0, 1], ...]}
//              | {"type": "uniform", "n": 3, "k": 2}
//              | {"type": "partition", "blocks": [[0, 1], [2]],
//                 "capacities": [1, 1]},
//     "labels": ["a", "b", ...],                      (optional)
//     "distributions": [{"support": [0, 1], "probs": [0.5, 0.5]}, ...],
//     "reduction": {"p": [...], "t": [...]}           (optional)
//   }
//
// Probabilities must sum to 1 within 1e-9. The optional "reduction" block
// pins a precomputed Bernoulli reduction; the verifier checks it as given.

#ifndef PROPHET_INSTANCE_IO_HPP_
#define PROPHET_INSTANCE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "prophet/stochastic.hpp"

namespace prophet {

inline constexpr int kInstanceFormatVersion = 1;
inline constexpr double kFileProbabilityTolerance = 1e-9;

struct InstanceFile {
  ProphetInstance instance;
  std::optional<BernoulliInstance> reduction;
};

nlohmann::json matroid_to_json(const Matroid& m);
MatroidPtr matroid_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const ProphetInstance& inst,
                                const BernoulliInstance* reduction = nullptr);
InstanceFile instance_from_json(const nlohmann::json& j);

/// Throws ValidationError on malformed content, std::runtime_error on I/O.
InstanceFile load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const ProphetInstance& inst,
                   const BernoulliInstance* reduction = nullptr);

enum class InstanceFamily { kRandomGraph, kUniform, kPartition };
enum class DistributionFamily { kIidDiscrete, kPerItemRandom };

struct GeneratorSpec {
  InstanceFamily family = InstanceFamily::kRandomGraph;
  // random-graph
  int vertices = 4;
  int edges = 5;
  bool parallel_edges = true;
  // uniform
  int n = 3;
  int k = 1;
  // partition
  std::vector<ElementSet> blocks;
  std::vector<int> capacities;
  // values
  DistributionFamily distribution = DistributionFamily::kPerItemRandom;
  /// iid: exact support size; per-item: each item draws a size in [1, this].
  int support_size = 3;
  /// Values are distinct integers in [0, max_value].
  int max_value = 10;
};

InstanceFamily parse_family(const std::string& name);
DistributionFamily parse_distribution_family(const std::string& name);

/// Reproducible per (spec, seed). Throws ValidationError on bad parameters.
ProphetInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace prophet

#endif  // PROPHET_INSTANCE_IO_HPP_
