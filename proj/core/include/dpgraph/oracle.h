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


#ifndef DPGRAPH_ORACLE_H_
#define DPGRAPH_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "dpgraph/graph.h"
#include "dpgraph/mechanisms.h"

namespace dpgraph {

// Exhaustive enumeration visits all 2^(n choose 2) labeled graphs. A graph on
// at most 7 nodes is identified by its pair mask ("code"): bit k set iff the
// k-th pair in lexicographic order is an edge.
inline constexpr int kDefaultEnumerationCap = 6;
inline constexpr int kMaxEnumerationNodes = 7;

struct EnumerationOptions {
  // Permits n = 7 (2^21 graphs).
  bool allow_large = false;
};

// Throws ResourceError if n is above the cap, DomainError if n < 1.
void CheckEnumerable(int n, const EnumerationOptions& options = {});

// 2^(n choose 2). Requires CheckEnumerable(n) to pass.
std::uint64_t NumGraphs(int n);

// Every graph on n nodes, ordered by code.
std::vector<Graph> EnumerateGraphs(int n, const EnumerationOptions& options = {});

// Output law of the graph exponential mechanism for sensitive graph `g`,
// indexed by code.
class ExactDistribution {
 public:
  ExactDistribution(int n, std::vector<double> probabilities);

  int num_nodes() const { return n_; }
  std::span<const double> probabilities() const { return probabilities_; }
  double Mass(const Graph& h) const;
  double Total() const;

 private:
  int n_;
  std::vector<double> probabilities_;
};

ExactDistribution ComputeExactDistribution(
    const Graph& g, const PrivacyParams& params,
    const EnumerationOptions& options = {});

// Probability that the edge-wise sampler produces `h` from `g`: the product
// over pairs of keep (pair agrees with g) or flip (pair disagrees). Computed
// pair by pair, independent of the closed-form exponential mechanism.
double EdgewiseOutputProbability(const Graph& g, const Graph& h,
                                 const FlipProbability& p);

// Result of an exhaustive differential-privacy audit.
struct DpAudit {
  int n = 0;
  // max over adjacent (g, g') and outputs h of P[g -> h] / P[g' -> h].
  double max_ratio = 1.0;
  Graph witness_g;
  Graph witness_g_prime;
  Graph witness_h;
  // Largest ratio among pairs at edge distance exactly A; 0 when no such
  // pair exists (A > n choose 2).
  double max_ratio_at_distance_a = 0.0;
};

DpAudit AuditDpRatio(int n, const PrivacyParams& params,
                     const EnumerationOptions& options = {});

// Sample count per code. Throws DomainError if a sample has the wrong node
// count.
std::vector<std::int64_t> CountOutcomes(int n, std::span<const Graph> samples);

// (1/2) sum_h |empirical(h) - exact(h)|.
double EmpiricalTvDistance(const ExactDistribution& exact,
                           std::span<const Graph> samples);
double EmpiricalTvDistance(const ExactDistribution& exact,
                           std::span<const std::int64_t> counts);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Pearson goodness of fit of `counts` against `exact`. Outcomes whose
// expected count is below `min_expected` are pooled into one bin so the
// chi-square approximation holds.
ChiSquareResult ChiSquareGoodnessOfFit(const ExactDistribution& exact,
                                       std::span<const std::int64_t> counts,
                                       double min_expected = 5.0);

// Occupancy of the utility classes: counts[k] = number of samples at edge
// distance k from the reference graph.
class UtilityClassHistogram {
 public:
  explicit UtilityClassHistogram(const Graph& reference);

  // Throws DomainError if `sample` has a different node count.
  void Add(const Graph& sample);

  std::span<const std::int64_t> counts() const { return counts_; }
  std::int64_t total() const { return total_; }
  double Mean() const;

 private:
  Graph reference_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

UtilityClassHistogram ComputeUtilityClassHistogram(
    const Graph& reference, std::span<const Graph> samples);

}  // namespace dpgraph

#endif  // DPGRAPH_ORACLE_H_
