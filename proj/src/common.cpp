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

#include "prophet/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace prophet {

EnumerationCap EnumerationCap::from_env() {
  EnumerationCap cap;
  if (const char* raw = std::getenv(kEnvVar); raw != nullptr && *raw) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) cap.max_outcomes = value;
  }
  return cap;
}

void EnumerationCap::check(double count, std::string_view what) const {
  if (!allows(count)) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(count) +
                      " outcomes exceed the enumeration cap of " +
                      std::to_string(max_outcomes));
  }
}

ElementSet make_element_set(std::vector<Element> s, int n) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= n)) {
    throw ValidationError("element index out of range [0, " +
                          std::to_string(n) + ")");
  }
  return s;
}

bool contains(const ElementSet& s, Element e) {
  return std::binary_search(s.begin(), s.end(), e);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(stream_seed(seed, index));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("uniform_below: empty range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

void shuffle(std::vector<Element>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace prophet
