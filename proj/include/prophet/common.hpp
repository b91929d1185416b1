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

#ifndef PROPHET_COMMON_HPP_
#define PROPHET_COMMON_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prophet {

/// Index of a ground-set element. Indices are dense: 0..n-1.
using Element = int;

/// Sorted, duplicate-free list of ground-set elements.
using ElementSet = std::vector<Element>;

/// Per-element nonnegative reals (realized values, probabilities, weights).
using WeightVector = std::vector<double>;

using Rng = std::mt19937_64;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Bad input: malformed instance, out-of-range index, violated precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact enumeration would exceed the configured outcome budget.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Budget for every exponential enumeration in the library (product
/// supports, subsets, cuts, pass patterns, permutations).
struct EnumerationCap {
  static constexpr std::uint64_t kDefault = std::uint64_t{1} << 20;
  static constexpr const char* kEnvVar = "PROPHET_ENUM_CAP";

  std::uint64_t max_outcomes = kDefault;

  /// Default cap, overridden by PROPHET_ENUM_CAP when set to a positive
  /// integer.
  static EnumerationCap from_env();

  /// Throws CapExceeded when `count` outcomes exceed the budget.
  void check(double count, std::string_view what) const;
  bool allows(double count) const {
    return count <= static_cast<double>(max_outcomes);
  }
};

/// Canonicalizes `s` (sort + dedup) and checks every index is < n.
ElementSet make_element_set(std::vector<Element> s, int n);

bool contains(const ElementSet& s, Element e);

/// Independent stream for trial `index` of a run seeded with `seed`.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

/// The 64-bit seed that make_stream(seed, index) is initialized with.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw. Portable
/// across standard library implementations, unlike
/// std::uniform_real_distribution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Fisher-Yates shuffle driven by uniform_below (portable).
void shuffle(std::vector<Element>& items, Rng& rng);

}  // namespace prophet

#endif  // PROPHET_COMMON_HPP_
