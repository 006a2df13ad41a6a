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


#include "dpgraph/mechanisms.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "dpgraph/errors.h"

namespace dpgraph {
namespace {

constexpr std::int64_t kMaxLinearPairs = 64;

// x = epsilon / A. Infinite epsilon is a legal "no privacy" setting.
double ScaledEpsilon(const PrivacyParams& params) {
  return params.epsilon() / params.adjacency();
}

// log(1 + exp(-x)) for x >= 0.
double LogOnePlusExpNeg(double x) { return std::log1p(std::exp(-x)); }

// -x * k without the inf * 0 NaN.
double ScaledPenalty(double x, std::int64_t k) {
  return k == 0 ? 0.0 : -x * static_cast<double>(k);
}

}  // namespace

FlipProbability ComputeFlipProbability(const PrivacyParams& params) {
  const double x = ScaledEpsilon(params);
  // Logistic function. x >= 0 is guaranteed by PrivacyParams; the second
  // branch keeps the formula overflow-free if that ever changes.
  if (x >= 0) {
    const double e = std::exp(-x);
    return {1.0 / (1.0 + e), e / (1.0 + e)};
  }
  const double e = std::exp(x);
  return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

Graph SamplePrivateGraph(const Graph& g, const PrivacyParams& params,
                         std::uint64_t seed) {
  Engine engine(seed);
  return SamplePrivateGraph(g, ComputeFlipProbability(params), engine);
}

Graph SamplePrivateGraph(const Graph& g, const FlipProbability& p,
                         Engine& engine) {
  const std::int64_t pairs = g.num_pairs();
  std::vector<std::uint64_t> words(g.pair_words().size(), 0);
  for (std::int64_t k = 0; k < pairs; ++k) {
    const double u = UniformOpen01(engine);
    const bool include = g.HasPair(k) ? u < p.keep : u < p.flip;
    if (include) words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return Graph::FromPairBits(g.num_nodes(), std::move(words));
}

double LogNormalizationConstant(int n, const PrivacyParams& params) {
  if (n < 1) throw DomainError("node count must be >= 1");
  return static_cast<double>(NumPairs(n)) *
         LogOnePlusExpNeg(ScaledEpsilon(params));
}

double NormalizationConstant(int n, const PrivacyParams& params) {
  if (NumPairs(n) > kMaxLinearPairs) {
    throw RangeError("normalization constant for n=" + std::to_string(n) +
                     " is only available in log domain");
  }
  return std::exp(LogNormalizationConstant(n, params));
}

double LogExactOutputProbability(const Graph& g, const Graph& h,
                                 const PrivacyParams& params) {
  const std::int64_t k = EdgeDistance(g, h);
  return ScaledPenalty(ScaledEpsilon(params), k) -
         LogNormalizationConstant(g.num_nodes(), params);
}

double ExactOutputProbability(const Graph& g, const Graph& h,
                              const PrivacyParams& params) {
  if (g.num_pairs() > kMaxLinearPairs) {
    throw RangeError("linear-domain probabilities need at most 64 node pairs");
  }
  return std::exp(LogExactOutputProbability(g, h, params));
}

std::vector<double> UtilityClassPmf(int n, const PrivacyParams& params) {
  const std::int64_t m = NumPairs(n);
  const double x = ScaledEpsilon(params);
  const double log_c = LogNormalizationConstant(n, params);
  const double log_m_fact = std::lgamma(static_cast<double>(m) + 1.0);
  std::vector<double> pmf(static_cast<std::size_t>(m + 1));
  for (std::int64_t k = 0; k <= m; ++k) {
    const double log_binom =
        log_m_fact - std::lgamma(static_cast<double>(k) + 1.0) -
        std::lgamma(static_cast<double>(m - k) + 1.0);
    pmf[k] = std::exp(log_binom + ScaledPenalty(x, k) - log_c);
  }
  return pmf;
}

double PerQueryEpsilon(double total_epsilon, int n) {
  if (n < 2) throw DomainError("per-query epsilon needs n >= 2");
  if (!(total_epsilon > 0)) throw DomainError("total epsilon must be > 0");
  return total_epsilon / (n - 1);
}

}  // namespace dpgraph
