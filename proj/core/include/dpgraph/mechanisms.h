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


#ifndef DPGRAPH_MECHANISMS_H_
#define DPGRAPH_MECHANISMS_H_

#include <cstdint>
#include <vector>

#include "dpgraph/graph.h"
#include "dpgraph/random.h"

namespace dpgraph {

// Per-pair keep probability of the edge-wise sampler. Pairs present in the
// sensitive graph survive with probability `keep`; absent pairs appear with
// probability `flip` = 1 - keep. `flip` is computed directly rather than by
// subtraction so it stays accurate when keep is close to 1.
struct FlipProbability {
  double keep = 0.5;
  double flip = 0.5;
};

// keep = 1 / (1 + exp(-epsilon / A)), in [1/2, 1].
FlipProbability ComputeFlipProbability(const PrivacyParams& params);

// Edge-wise private graph sampler. Visits pairs (1,2), (1,3), ..., (n-1,n)
// and draws exactly one uniform per pair from an engine seeded with `seed`,
// so identical inputs and seed give an identical graph.
//
// The output law equals the graph exponential mechanism with utility
// -EdgeDistance and sensitivity A.
Graph SamplePrivateGraph(const Graph& g, const PrivacyParams& params,
                         std::uint64_t seed);

// Same sampler with an explicit probability and a caller-owned engine. Used for
// batch sampling and by the verification suite to inject a miscalibrated p.
Graph SamplePrivateGraph(const Graph& g, const FlipProbability& p,
                         Engine& engine);

// log C where C = (1 + exp(-epsilon/A))^(n choose 2) normalizes the graph
// exponential mechanism. C does not depend on the sensitive graph.
double LogNormalizationConstant(int n, const PrivacyParams& params);

// Linear-domain C. Throws RangeError when n(n-1)/2 > 64; use the log form.
double NormalizationConstant(int n, const PrivacyParams& params);

// log P[mechanism(g) = h] = epsilon * Utility(g, h) / A - log C.
double LogExactOutputProbability(const Graph& g, const Graph& h,
                                 const PrivacyParams& params);

// Linear-domain probability; only for graphs with at most 64 node pairs
// (RangeError otherwise).
double ExactOutputProbability(const Graph& g, const Graph& h,
                              const PrivacyParams& params);

// Probability that the output lies at edge distance exactly k from the
// sensitive graph, for k = 0..n(n-1)/2:
//   C(m, k) exp(-epsilon k / A) / C,   m = n(n-1)/2.
// Evaluated in log space, so any n is accepted.
std::vector<double> UtilityClassPmf(int n, const PrivacyParams& params);

// Per-eigenvalue budget for a comparator that spends `total_epsilon` across
// n - 1 independent eigenvalue queries. Throws DomainError if n < 2 or
// total_epsilon <= 0.
double PerQueryEpsilon(double total_epsilon, int n);

}  // namespace dpgraph

#endif  // DPGRAPH_MECHANISMS_H_
