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

#ifndef PROPHET_THRESHOLD_RULE_HPP_
#define PROPHET_THRESHOLD_RULE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "prophet/common.hpp"
#include "prophet/distribution.hpp"

namespace prophet {

/// Non-adaptive thresholds, one per item, fixed before any arrival.
/// Immutable: nothing in the library mutates a rule after construction.
class ThresholdRule {
 public:
  ThresholdRule() = default;
  explicit ThresholdRule(std::vector<ItemThreshold> items)
      : items_(std::move(items)) {}

  /// Rule that never accepts anything.
  static ThresholdRule reject_all(std::size_t n) {
    return ThresholdRule(std::vector<ItemThreshold>(n));
  }
  /// The same threshold on every item.
  static ThresholdRule uniform(std::size_t n, ItemThreshold t) {
    return ThresholdRule(std::vector<ItemThreshold>(n, t));
  }

  std::size_t size() const { return items_.size(); }
  const ItemThreshold& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<ItemThreshold>& items() const { return items_; }

  bool passes(Element i, double value, double coin) const {
    return items_[i].passes(value, coin);
  }

  /// Items with a finite threshold.
  ElementSet finite_items() const {
    ElementSet out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].is_finite()) out.push_back(static_cast<Element>(i));
    }
    return out;
  }

  friend bool operator==(const ThresholdRule&, const ThresholdRule&) = default;

 private:
  std::vector<ItemThreshold> items_;
};

}  // namespace prophet

#endif  // PROPHET_THRESHOLD_RULE_HPP_
