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


#include "dpgraph/verify.h"

#include <algorithm>
#include <cmath>

#include "dpgraph/errors.h"
#include "dpgraph/mechanisms.h"
#include "dpgraph/random.h"

namespace dpgraph {
namespace {

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

double RelativeError(double value, double reference) {
  if (value == reference) return 0.0;
  return std::abs(value - reference) / std::abs(reference);
}

CheckResult NormalizationIdentity(const std::vector<Graph>& graphs,
                                  const PrivacyParams& params) {
  const int n = graphs.front().num_nodes();
  const double closed_form = NormalizationConstant(n, params);
  const double scale = params.epsilon() / params.adjacency();
  CheckResult check{.name = "normalization_identity",
                    .threshold = kIdentityRelTolerance};
  const Graph* worst = &graphs.front();
  double worst_sum = closed_form;
  for (const Graph& g : graphs) {
    long double sum = 0;
    for (const Graph& h : graphs) {
      const std::int64_t u = Utility(g, h);
      sum += u == 0 ? 1.0L : std::exp(static_cast<long double>(scale) * u);
    }
    const double err = RelativeError(static_cast<double>(sum), closed_form);
    if (err >= check.achieved) {
      check.achieved = err;
      worst = &g;
      worst_sum = static_cast<double>(sum);
    }
  }
  check.passed = check.achieved <= check.threshold;
  check.detail = {{"closed_form", closed_form},
                  {"enumerated_sum_at_worst", worst_sum},
                  {"worst_g", EdgesToJson(*worst)}};
  return check;
}

std::vector<CheckResult> DpChecks(int n, const PrivacyParams& params,
                                  const EnumerationOptions& enumeration) {
  const DpAudit audit = AuditDpRatio(n, params, enumeration);
  const double bound = std::exp(params.epsilon());
  std::vector<CheckResult> out;

  CheckResult bound_check{.name = "dp_ratio_bound",
                          .achieved = audit.max_ratio,
                          .threshold = bound * (1.0 + kDpRatioSlack)};
  bound_check.passed = audit.max_ratio <= bound_check.threshold;
  bound_check.detail = {{"exp_epsilon", bound},
                        {"witness_g", EdgesToJson(audit.witness_g)},
                        {"witness_g_prime", EdgesToJson(audit.witness_g_prime)},
                        {"witness_h", EdgesToJson(audit.witness_h)}};
  out.push_back(std::move(bound_check));

  if (params.adjacency() <= NumPairs(n)) {
    // achieved = |best ratio at distance A - e^eps|.
    CheckResult attained{
        .name = "dp_ratio_attained",
        .achieved = std::abs(audit.max_ratio_at_distance_a - bound),
        .threshold = kDpAttainTolerance};
    attained.passed = attained.achieved <= kDpAttainTolerance;
    attained.detail = {{"exp_epsilon", bound},
                       {"max_ratio_at_distance_a", audit.max_ratio_at_distance_a}};
    out.push_back(std::move(attained));
  }
  return out;
}

CheckResult ProductFormEquivalence(const std::vector<Graph>& graphs,
                                   const PrivacyParams& params) {
  const FlipProbability p = ComputeFlipProbability(params);
  CheckResult check{.name = "product_form_equivalence",
                    .threshold = kIdentityRelTolerance};
  const Graph* worst_g = &graphs.front();
  const Graph* worst_h = &graphs.front();
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      const double exact = ExactOutputProbability(g, h, params);
      const double edgewise = EdgewiseOutputProbability(g, h, p);
      const double err = RelativeError(edgewise, exact);
      if (err > check.achieved) {
        check.achieved = err;
        worst_g = &g;
        worst_h = &h;
      }
    }
  }
  check.passed = check.achieved <= check.threshold;
  check.detail = {{"keep_probability", p.keep},
                  {"worst_g", EdgesToJson(*worst_g)},
                  {"worst_h", EdgesToJson(*worst_h)}};
  return check;
}

std::vector<CheckResult> SampledChecks(int n, const PrivacyParams& params,
                                       const VerifyOptions& options,
                                       std::uint64_t seed) {
  const Graph reference = PathGraph(n);
  const ExactDistribution exact =
      ComputeExactDistribution(reference, params, options.enumeration);

  FlipProbability p = ComputeFlipProbability(params);
  if (options.keep_probability_offset != 0.0) {
    p.keep = std::clamp(p.keep + options.keep_probability_offset, 0.0, 1.0);
    p.flip = 1.0 - p.keep;
  }

  std::vector<std::int64_t> counts(NumGraphs(n), 0);
  Engine engine(seed);
  for (std::int64_t i = 0; i < options.samples; ++i) {
    ++counts[SamplePrivateGraph(reference, p, engine).PairMask()];
  }

  const nlohmann::json common = {{"samples", options.samples},
                                 {"seed", seed},
                                 {"reference_g", EdgesToJson(reference)},
                                 {"keep_probability", p.keep}};
  CheckResult tv{.name = "sampled_tv",
                 .achieved = EmpiricalTvDistance(exact, counts),
                 .threshold = kTvThreshold,
                 .detail = common};
  tv.passed = tv.achieved < tv.threshold;

  const ChiSquareResult chi = ChiSquareGoodnessOfFit(exact, counts);
  CheckResult chi_check{.name = "sampled_chi_square",
                        .achieved = chi.p_value,
                        .threshold = kChiSquareAlpha,
                        .detail = common};
  chi_check.detail["statistic"] = chi.statistic;
  chi_check.detail["degrees_of_freedom"] = chi.degrees_of_freedom;
  chi_check.passed = chi.p_value > kChiSquareAlpha;
  return {tv, chi_check};
}

}  // namespace

nlohmann::json EdgesToJson(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.Edges()) edges.push_back({e.u, e.v});
  return edges;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerificationReport::ToJson() const {
  nlohmann::json out;
  out["n"] = n;
  out["passed"] = passed();
  auto& list = out["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    list.push_back({{"name", c.name},
                    {"epsilon", c.epsilon},
                    {"adjacency", c.adjacency},
                    {"passed", c.passed},
                    {"achieved", c.achieved},
                    {"threshold", c.threshold},
                    {"detail", c.detail}});
  }
  return out;
}

VerificationReport RunVerification(const VerifyOptions& options) {
  CheckEnumerable(options.n, options.enumeration);
  if (options.epsilons.empty() || options.adjacencies.empty()) {
    throw DomainError("verification grid is empty");
  }
  for (double eps : options.epsilons) {
    if (!std::isfinite(eps)) throw DomainError("grid epsilons must be finite");
  }

  const std::vector<Graph> graphs =
      EnumerateGraphs(options.n, options.enumeration);
  VerificationReport report;
  report.n = options.n;
  std::uint64_t grid_index = 0;
  for (double eps : options.epsilons) {
    for (int a : options.adjacencies) {
      const PrivacyParams params(eps, a);
      std::vector<CheckResult> checks;
      checks.push_back(NormalizationIdentity(graphs, params));
      for (auto& c : DpChecks(options.n, params, options.enumeration)) {
        checks.push_back(std::move(c));
      }
      checks.push_back(ProductFormEquivalence(graphs, params));
      if (options.samples > 0) {
        const std::uint64_t seed = DeriveSeed(options.seed, {grid_index});
        for (auto& c : SampledChecks(options.n, params, options, seed)) {
          checks.push_back(std::move(c));
        }
      }
      for (auto& c : checks) {
        c.epsilon = eps;
        c.adjacency = a;
        report.checks.push_back(std::move(c));
      }
      ++grid_index;
    }
  }
  return report;
}

}  // namespace dpgraph
