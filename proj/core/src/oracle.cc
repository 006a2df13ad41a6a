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


#include "dpgraph/oracle.h"

#include <bit>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dpgraph/errors.h"

namespace dpgraph {
namespace {

void RequireNodes(const Graph& g, int n) {
  if (g.num_nodes() != n) {
    throw DomainError("sample has " + std::to_string(g.num_nodes()) +
                      " nodes, expected " + std::to_string(n));
  }
}

// Pair masks with between 1 and `max_bits` bits set, out of `pairs` bits.
std::vector<std::uint64_t> FlipMasks(int pairs, int max_bits) {
  std::vector<std::uint64_t> masks;
  const std::uint64_t limit = std::uint64_t{1} << pairs;
  for (std::uint64_t s = 1; s < limit; ++s) {
    if (std::popcount(s) <= max_bits) masks.push_back(s);
  }
  return masks;
}

}  // namespace

void CheckEnumerable(int n, const EnumerationOptions& options) {
  if (n < 1) throw DomainError("enumeration needs n >= 1");
  const int cap = options.allow_large ? kMaxEnumerationNodes
                                      : kDefaultEnumerationCap;
  if (n > cap) {
    throw ResourceError("enumerating graphs on " + std::to_string(n) +
                        " nodes exceeds the cap of " + std::to_string(cap) +
                        (n <= kMaxEnumerationNodes ? " (pass allow_large)" : ""));
  }
}

std::uint64_t NumGraphs(int n) {
  return std::uint64_t{1} << NumPairs(n);
}

std::vector<Graph> EnumerateGraphs(int n, const EnumerationOptions& options) {
  CheckEnumerable(n, options);
  const std::uint64_t count = NumGraphs(n);
  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    graphs.push_back(Graph::FromPairMask(n, code));
  }
  return graphs;
}

ExactDistribution::ExactDistribution(int n, std::vector<double> probabilities)
    : n_(n), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != NumGraphs(n)) {
    throw DomainError("distribution must have one entry per graph");
  }
}

double ExactDistribution::Mass(const Graph& h) const {
  RequireNodes(h, n_);
  return probabilities_[h.PairMask()];
}

double ExactDistribution::Total() const {
  long double total = 0;
  for (double p : probabilities_) total += p;
  return static_cast<double>(total);
}

ExactDistribution ComputeExactDistribution(const Graph& g,
                                           const PrivacyParams& params,
                                           const EnumerationOptions& options) {
  const int n = g.num_nodes();
  CheckEnumerable(n, options);
  const std::uint64_t count = NumGraphs(n);
  std::vector<double> probabilities(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    probabilities[code] =
        ExactOutputProbability(g, Graph::FromPairMask(n, code), params);
  }
  return ExactDistribution(n, std::move(probabilities));
}

double EdgewiseOutputProbability(const Graph& g, const Graph& h,
                                 const FlipProbability& p) {
  if (g.num_nodes() != h.num_nodes()) {
    throw DomainError("graphs have different node counts");
  }
  long double product = 1.0L;
  for (std::int64_t k = 0; k < g.num_pairs(); ++k) {
    product *= g.HasPair(k) == h.HasPair(k) ? p.keep : p.flip;
  }
  return static_cast<double>(product);
}

DpAudit AuditDpRatio(int n, const PrivacyParams& params,
                     const EnumerationOptions& options) {
  CheckEnumerable(n, options);
  const int pairs = static_cast<int>(NumPairs(n));
  const std::uint64_t count = NumGraphs(n);

  // Up to n = 5 every P[g -> h] is evaluated individually. Beyond that the
  // 2^m x 2^m table no longer fits, and P[g -> h] is looked up by distance
  // from one reference row instead.
  const bool full_table = n <= 5;
  std::vector<double> table;
  if (full_table) {
    table.resize(count * count);
    for (std::uint64_t g = 0; g < count; ++g) {
      const Graph graph_g = Graph::FromPairMask(n, g);
      for (std::uint64_t h = 0; h < count; ++h) {
        table[g * count + h] =
            ExactOutputProbability(graph_g, Graph::FromPairMask(n, h), params);
      }
    }
  } else {
    const Graph empty(n);
    for (int k = 0; k <= pairs; ++k) {
      const std::uint64_t h = (std::uint64_t{1} << k) - 1;
      table.push_back(
          ExactOutputProbability(empty, Graph::FromPairMask(n, h), params));
    }
  }
  auto prob = [&](std::uint64_t g, std::uint64_t h) {
    return full_table ? table[g * count + h] : table[std::popcount(g ^ h)];
  };

  DpAudit audit;
  audit.n = n;
  audit.witness_g = audit.witness_g_prime = audit.witness_h = Graph(n);
  std::uint64_t best_g = 0, best_gp = 0, best_h = 0;
  const int a = params.adjacency();
  for (std::uint64_t g = 0; g < count; ++g) {
    for (std::uint64_t flip : FlipMasks(pairs, a)) {
      const std::uint64_t gp = g ^ flip;
      const bool at_a = std::popcount(flip) == a;
      for (std::uint64_t h = 0; h < count; ++h) {
        const double num = prob(g, h);
        const double den = prob(gp, h);
        if (num == 0.0 && den == 0.0) continue;
        const double ratio = num / den;
        if (ratio > audit.max_ratio) {
          audit.max_ratio = ratio;
          best_g = g;
          best_gp = gp;
          best_h = h;
        }
        if (at_a && ratio > audit.max_ratio_at_distance_a) {
          audit.max_ratio_at_distance_a = ratio;
        }
      }
    }
  }
  audit.witness_g = Graph::FromPairMask(n, best_g);
  audit.witness_g_prime = Graph::FromPairMask(n, best_gp);
  audit.witness_h = Graph::FromPairMask(n, best_h);
  return audit;
}

std::vector<std::int64_t> CountOutcomes(int n, std::span<const Graph> samples) {
  CheckEnumerable(n, {.allow_large = true});
  std::vector<std::int64_t> counts(NumGraphs(n), 0);
  for (const Graph& s : samples) {
    RequireNodes(s, n);
    ++counts[s.PairMask()];
  }
  return counts;
}

double EmpiricalTvDistance(const ExactDistribution& exact,
                           std::span<const Graph> samples) {
  return EmpiricalTvDistance(exact,
                             CountOutcomes(exact.num_nodes(), samples));
}

double EmpiricalTvDistance(const ExactDistribution& exact,
                           std::span<const std::int64_t> counts) {
  const auto probs = exact.probabilities();
  if (counts.size() != probs.size()) {
    throw DomainError("outcome counts do not match the distribution size");
  }
  const auto total = std::accumulate(counts.begin(), counts.end(),
                                     std::int64_t{0});
  if (total == 0) throw DomainError("no samples");
  long double l1 = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double freq = static_cast<double>(counts[i]) / total;
    l1 += std::abs(freq - probs[i]);
  }
  return static_cast<double>(l1 / 2);
}

ChiSquareResult ChiSquareGoodnessOfFit(const ExactDistribution& exact,
                                       std::span<const std::int64_t> counts,
                                       double min_expected) {
  const auto probs = exact.probabilities();
  if (counts.size() != probs.size()) {
    throw DomainError("outcome counts do not match the distribution size");
  }
  const auto total = static_cast<double>(
      std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  if (total == 0) throw DomainError("no samples");

  ChiSquareResult result;
  int bins = 0;
  double pooled_expected = 0.0;
  double pooled_observed = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double expected = probs[i] * total;
    const auto observed = static_cast<double>(counts[i]);
    if (expected < min_expected) {
      pooled_expected += expected;
      pooled_observed += observed;
      continue;
    }
    result.statistic += (observed - expected) * (observed - expected) / expected;
    ++bins;
  }
  if (pooled_expected > 0.0) {
    const double d = pooled_observed - pooled_expected;
    result.statistic += d * d / pooled_expected;
    ++bins;
  } else if (pooled_observed > 0.0) {
    // Samples landed on zero-probability outcomes.
    result.statistic = std::numeric_limits<double>::infinity();
  }
  result.degrees_of_freedom = bins - 1;
  if (result.degrees_of_freedom < 1) {
    result.p_value = std::isinf(result.statistic) ? 0.0 : 1.0;
    return result;
  }
  if (std::isinf(result.statistic)) {
    result.p_value = 0.0;
    return result;
  }
  const boost::math::chi_squared dist(result.degrees_of_freedom);
  result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  return result;
}

UtilityClassHistogram::UtilityClassHistogram(const Graph& reference)
    : reference_(reference),
      counts_(static_cast<std::size_t>(reference.num_pairs() + 1), 0) {}

void UtilityClassHistogram::Add(const Graph& sample) {
  ++counts_[EdgeDistance(reference_, sample)];
  ++total_;
}

double UtilityClassHistogram::Mean() const {
  if (total_ == 0) return 0.0;
  long double sum = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    sum += static_cast<long double>(k) * counts_[k];
  }
  return static_cast<double>(sum / total_);
}

UtilityClassHistogram ComputeUtilityClassHistogram(
    const Graph& reference, std::span<const Graph> samples) {
  UtilityClassHistogram hist(reference);
  for (const Graph& s : samples) hist.Add(s);
  return hist;
}

}  // namespace dpgraph
