//
// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#ifndef DPGRAPH_VERIFY_H_
#define DPGRAPH_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpgraph/oracle.h"

namespace dpgraph {

// Tolerances of the exhaustive verification suite.
inline constexpr double kIdentityRelTolerance = 1e-12;
inline constexpr double kDpRatioSlack = 1e-12;
inline constexpr double kDpAttainTolerance = 1e-9;
inline constexpr double kTvThreshold = 0.01;
inline constexpr double kChiSquareAlpha = 0.001;

struct VerifyOptions {
  int n = 3;
  std::vector<double> epsilons = {0.0, 0.5, 1.0, 2.5};
  std::vector<int> adjacencies = {1, 2};
  std::uint64_t seed = 20260101;
  // Sampler draws per grid point for the statistical checks; 0 skips them.
  std::int64_t samples = 1'000'000;
  // Test hook: added to the sampler's keep probability (and subtracted from
  // its flip probability) in the statistical checks only.
  double keep_probability_offset = 0.0;
  EnumerationOptions enumeration;
};

struct CheckResult {
  std::string name;
  double epsilon = 0.0;
  int adjacency = 1;
  bool passed = false;
  double achieved = 0.0;
  double threshold = 0.0;
  // Free-form details, e.g. the (g, g', h) witness of a failure.
  nlohmann::json detail = nlohmann::json::object();
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json ToJson() const;
};

// Runs, for every (epsilon, A) grid point:
//  - normalization_identity: sum_H exp(eps u(g,H)/A) equals the closed-form
//    constant for every g (max relative error);
//  - dp_ratio_bound: max probability ratio over adjacent inputs <= e^eps;
//  - dp_ratio_attained: some pair at distance exactly A reaches e^eps;
//  - product_form_equivalence: the edge-wise product of keep/flip
//    probabilities equals the exponential mechanism for every (g, h);
//  - sampled_tv and sampled_chi_square: sampler output against the exact law.
VerificationReport RunVerification(const VerifyOptions& options);

// Edge list as [[u, v], ...] for reports.
nlohmann::json EdgesToJson(const Graph& g);

}  // namespace dpgraph

#endif  // DPGRAPH_VERIFY_H_
