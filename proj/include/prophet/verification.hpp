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

// Guarantee checks run by `prophet verify` and the acceptance suite. Each
// check reports a slack: the margin by which the guaranteed inequality
// holds (negative when it is violated).

#ifndef PROPHET_VERIFICATION_HPP_
#define PROPHET_VERIFICATION_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "prophet/graphic_prophet.hpp"
#include "prophet/instance_io.hpp"
#include "prophet/stochastic.hpp"

namespace prophet {

enum class CheckStatus { kPass, kFail, kSkip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  double slack = kInfinity;
  std::string detail;
};

namespace check {

inline constexpr const char* kBenchmark = "ex-ante benchmark >= prophet";
inline constexpr const char* kPolytope = "activation vector in polytope";
inline constexpr const char* kCouplingItems = "coupling selects same items";
inline constexpr const char* kCouplingExpected = "coupling value in expectation";
inline constexpr const char* kCouplingPointwise = "coupling value per realization";
inline constexpr const char* kOrientation = "orientation in-mass <= 1/2";
inline constexpr const char* kBlockage = "incoming blockage <= 1/2";
inline constexpr const char* kCutBound = "random cut >= 1/8 benchmark";
inline constexpr const char* kDerandomized = "derandomized cut >= random cut";
inline constexpr const char* kGraphicRatio = "graphic thresholds >= Opt/32";
inline constexpr const char* kBaselineRatio = "baselines >= Opt/2";
inline constexpr const char* kWorstOrder = "t-ascending order is worst";

inline constexpr double kValueTolerance = 1e-9;
inline constexpr double kMassTolerance = 1e-12;

}  // namespace check

CheckResult check_benchmark(const BernoulliInstance& reduced, double opt);
CheckResult check_polytope(const BernoulliInstance& reduced, EnumerationCap cap);

/// Exhaustive audit of the quantile coupling between the value view and the
/// Bernoulli view, over every realization and every atom-coin branch, with
/// items arriving in t-ascending order.
struct CouplingAudit {
  std::uint64_t outcomes = 0;
  std::uint64_t set_mismatches = 0;    // accepted sets differ
  std::uint64_t value_violations = 0;  // value view < Bernoulli view
  double min_pointwise_slack = kInfinity;
  double expected_value = 0.0;          // value view
  double expected_bernoulli_value = 0.0;
};

CouplingAudit audit_coupling(const ProphetInstance& inst,
                             const BernoulliInstance& reduced, EnumerationCap cap);

/// Three rows: same items, expectation, per-realization value.
std::vector<CheckResult> check_coupling(const ProphetInstance& inst,
                                        const BernoulliInstance& reduced,
                                        EnumerationCap cap);

CheckResult check_orientation(const GraphicPlan& plan);

/// For every edge i into v and every S within E \ out(v):
/// b_i(S) <= 1/2 under the scaled activation vector.
CheckResult check_incoming_blockage(const GraphicPlan& plan, EnumerationCap cap);

CheckResult check_cut_bound(const GraphicPlan& plan, EnumerationCap cap);
CheckResult check_derandomized_cut(const GraphicPlan& plan, EnumerationCap cap);

/// Exact expected online value of the random-cut thresholds under the
/// worst-case order against Opt / 32.
CheckResult check_graphic_ratio(const ProphetInstance& inst, const GraphicPlan& plan,
                                double opt, EnumerationCap cap);

/// Both single-threshold methods (or both partition methods) against Opt/2.
CheckResult check_baseline_ratio(const ProphetInstance& inst,
                                 const BernoulliInstance& reduced, double opt,
                                 EnumerationCap cap);

/// Exhaustive order search on the Bernoulli instance never beats the
/// t-ascending order. Skipped above 7 items.
CheckResult check_worst_case_order(const BernoulliInstance& reduced,
                                   EnumerationCap cap);

/// Every applicable check for one instance file. A stored reduction is
/// checked as given; otherwise an exact reduction is computed.
std::vector<CheckResult> verify_instance(const InstanceFile& file, EnumerationCap cap);

struct SuiteRow {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  double min_slack = kInfinity;
  std::string first_failure;
};

struct SuiteReport {
  std::uint64_t instances = 0;
  std::vector<SuiteRow> rows;
  bool all_passed() const;
};

/// Runs verify_instance on every *.json file in `dir` (sorted by name).
/// Throws ValidationError when the directory holds no instances.
SuiteReport verify_suite(const std::filesystem::path& dir, EnumerationCap cap);

void print_suite_report(const SuiteReport& report, std::ostream& out);

}  // namespace prophet

#endif  // PROPHET_VERIFICATION_HPP_
