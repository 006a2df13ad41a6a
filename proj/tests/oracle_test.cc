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

#include <cmath>
#include <cstdint>
#include <vector>

#include "dpgraph/errors.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace dpgraph {
namespace {

TEST(EnumerationTest, CountsAndCaps) {
  EXPECT_EQ(NumGraphs(1), 1u);
  EXPECT_EQ(NumGraphs(3), 8u);
  EXPECT_EQ(NumGraphs(6), 32768u);
  EXPECT_EQ(EnumerateGraphs(4).size(), 64u);
  EXPECT_THROW(EnumerateGraphs(7), ResourceError);
  EXPECT_THROW(CheckEnumerable(8, {.allow_large = true}), ResourceError);
  EXPECT_NO_THROW(CheckEnumerable(7, {.allow_large = true}));
  EXPECT_THROW(CheckEnumerable(0), DomainError);
}

TEST(EnumerationTest, GraphsAreDistinctAndIndexedByCode) {
  const auto graphs = EnumerateGraphs(4);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(graphs[i].PairMask(), i);
  }
}

// Number of graphs at distance k from any reference is C(m, k).
TEST(EnumerationTest, DistanceClassSizesAreBinomial) {
  const Graph g = testing::RandomGraph(6, 0.5, 11);
  std::vector<int> sizes(16, 0);
  for (const Graph& h : EnumerateGraphs(6)) ++sizes[EdgeDistance(g, h)];
  const int expected[] = {1,    15,   105,  455,  1365, 3003, 5005, 6435,
                          6435, 5005, 3003, 1365, 455,  105,  15,   1};
  for (int k = 0; k < 16; ++k) EXPECT_EQ(sizes[k], expected[k]) << k;
}

TEST(ExactDistributionTest, UniformAtZeroEpsilon) {
  const auto dist =
      ComputeExactDistribution(testing::Path(3), PrivacyParams(0.0, 1));
  for (double p : dist.probabilities()) EXPECT_DOUBLE_EQ(p, 0.125);
  EXPECT_NEAR(dist.Total(), 1.0, 1e-15);
}

TEST(ExactDistributionTest, ModeIsTheInput) {
  const Graph g = testing::ThreeEdgePath();
  const auto dist = ComputeExactDistribution(g, PrivacyParams(2.0, 1));
  double best = 0;
  for (double p : dist.probabilities()) best = std::max(best, p);
  EXPECT_EQ(dist.Mass(g), best);
  EXPECT_NEAR(dist.Total(), 1.0, 1e-12);
  EXPECT_THROW(dist.Mass(Graph(3)), DomainError);
  EXPECT_THROW(ExactDistribution(3, std::vector<double>(7, 0.1)), DomainError);
}

TEST(EdgewiseOutputProbabilityTest, ProductOfPerPairTerms) {
  const FlipProbability p = ComputeFlipProbability(PrivacyParams(1.0, 1));
  const Graph g = testing::Path(3);  // edges 12, 23
  const std::vector<Edge> h_edges = {{1, 2}, {1, 3}};
  const Graph h(3, h_edges);  // keeps 12, drops 23, adds 13
  EXPECT_NEAR(EdgewiseOutputProbability(g, h, p), p.keep * p.flip * p.flip,
              1e-16);
  EXPECT_NEAR(EdgewiseOutputProbability(g, g, p), p.keep * p.keep * p.keep,
              1e-16);
}

TEST(AuditDpRatioTest, Examples) {
  EXPECT_NEAR(AuditDpRatio(3, PrivacyParams(0.0, 1)).max_ratio, 1.0, 1e-12);
  EXPECT_NEAR(AuditDpRatio(3, PrivacyParams(1.0, 1)).max_ratio, std::exp(1.0),
              1e-12);
  EXPECT_NEAR(AuditDpRatio(4, PrivacyParams(2.0, 2)).max_ratio, std::exp(2.0),
              1e-11);
  EXPECT_NEAR(AuditDpRatio(6, PrivacyParams(1.0, 1)).max_ratio, std::exp(1.0),
              1e-11);
}

TEST(AuditDpRatioTest, WitnessIsAdjacentAndAttainsTheRatio) {
  const PrivacyParams params(2.5, 2);
  const DpAudit audit = AuditDpRatio(4, params);
  EXPECT_TRUE(IsAdjacent(audit.witness_g, audit.witness_g_prime, 2));
  const double ratio =
      ExactOutputProbability(audit.witness_g, audit.witness_h, params) /
      ExactOutputProbability(audit.witness_g_prime, audit.witness_h, params);
  EXPECT_NEAR(ratio, audit.max_ratio, 1e-9);
  EXPECT_NEAR(audit.max_ratio_at_distance_a, std::exp(2.5), 1e-9);
}

TEST(AuditDpRatioTest, AdjacencyBeyondPairCount) {
  const DpAudit audit = AuditDpRatio(2, PrivacyParams(1.0, 2));
  EXPECT_EQ(audit.max_ratio_at_distance_a, 0.0);
  // Only one pair can differ, so the ratio is e^(eps/A).
  EXPECT_NEAR(audit.max_ratio, std::exp(0.5), 1e-12);
}

TEST(TvDistanceTest, Examples) {
  const auto uniform = ComputeExactDistribution(Graph(2), PrivacyParams(0.0, 1));
  const std::vector<std::int64_t> even = {50, 50};
  const std::vector<std::int64_t> point = {100, 0};
  EXPECT_DOUBLE_EQ(EmpiricalTvDistance(uniform, even), 0.0);
  EXPECT_DOUBLE_EQ(EmpiricalTvDistance(uniform, point), 0.5);

  const std::vector<Graph> samples = {Graph(2), Graph(2), Graph::Complete(2),
                                      Graph(2)};
  const auto counts = CountOutcomes(2, samples);
  EXPECT_EQ(counts, (std::vector<std::int64_t>{3, 1}));
  EXPECT_DOUBLE_EQ(EmpiricalTvDistance(uniform, samples), 0.25);

  const std::vector<std::int64_t> none = {0, 0};
  EXPECT_THROW(EmpiricalTvDistance(uniform, none), DomainError);
  const std::vector<std::int64_t> wrong = {1};
  EXPECT_THROW(EmpiricalTvDistance(uniform, wrong), DomainError);
}

TEST(ChiSquareTest, OneDegreeOfFreedomMatchesErfc) {
  const auto uniform = ComputeExactDistribution(Graph(2), PrivacyParams(0.0, 1));
  const std::vector<std::int64_t> counts = {60, 40};
  const ChiSquareResult r = ChiSquareGoodnessOfFit(uniform, counts);
  EXPECT_DOUBLE_EQ(r.statistic, 4.0);
  EXPECT_EQ(r.degrees_of_freedom, 1);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(2.0)), 1e-12);

  const std::vector<std::int64_t> exact = {50, 50};
  EXPECT_DOUBLE_EQ(ChiSquareGoodnessOfFit(uniform, exact).p_value, 1.0);
}

TEST(ChiSquareTest, SmallExpectedBinsArePooled) {
  // Expected counts 80 and 20: nothing is pooled.
  const ExactDistribution dist(2, {0.8, 0.2});
  const std::vector<std::int64_t> counts = {80, 20};
  EXPECT_EQ(ChiSquareGoodnessOfFit(dist, counts).degrees_of_freedom, 1);
  const std::vector<std::int64_t> tiny = {3, 1};
  // Both bins fall below 5 and pool into one: nothing to test.
  const ChiSquareResult r = ChiSquareGoodnessOfFit(dist, tiny);
  EXPECT_EQ(r.degrees_of_freedom, 0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(ChiSquareTest, MassOnImpossibleOutcomeRejects) {
  const ExactDistribution dist(2, {1.0, 0.0});
  const std::vector<std::int64_t> counts = {99, 1};
  const ChiSquareResult r = ChiSquareGoodnessOfFit(dist, counts);
  EXPECT_TRUE(std::isinf(r.statistic));
  EXPECT_EQ(r.p_value, 0.0);
}

TEST(UtilityClassHistogramTest, Examples) {
  const Graph g = testing::CompleteK4();
  UtilityClassHistogram hist(g);
  EXPECT_EQ(hist.counts().size(), 7u);
  EXPECT_EQ(hist.Mean(), 0.0);
  hist.Add(g);
  hist.Add(testing::FourCycle());  // distance 2
  hist.Add(Graph(4));               // distance 6
  EXPECT_EQ(hist.total(), 3);
  EXPECT_EQ(hist.counts()[0], 1);
  EXPECT_EQ(hist.counts()[2], 1);
  EXPECT_EQ(hist.counts()[6], 1);
  EXPECT_DOUBLE_EQ(hist.Mean(), 8.0 / 3);
  EXPECT_THROW(hist.Add(Graph(5)), DomainError);

  const std::vector<Graph> samples = {g, g};
  EXPECT_EQ(ComputeUtilityClassHistogram(g, samples).counts()[0], 2);
}

}  // namespace
}  // namespace dpgraph
