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


#include <benchmark/benchmark.h>

#include "dpgraph/bounded_laplace.h"
#include "dpgraph/mechanisms.h"
#include "test_graphs.h"

namespace dpgraph {
namespace {

void BM_SamplePrivateGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = testing::RandomGraph(n, 0.12, 1);
  const FlipProbability p = ComputeFlipProbability(PrivacyParams(2.5, 1));
  Engine engine(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SamplePrivateGraph(g, p, engine));
  }
  state.SetItemsProcessed(state.iterations() * g.num_pairs());
}
BENCHMARK(BM_SamplePrivateGraph)->Arg(16)->Arg(168)->Arg(1024);

void BM_UtilityClassPmf(benchmark::State& state) {
  const PrivacyParams params(2.5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(UtilityClassPmf(168, params));
  }
}
BENCHMARK(BM_UtilityClassPmf);

void BM_BaselineSpectrum(benchmark::State& state) {
  const Spectrum truth =
      LaplacianSpectrum(testing::ConnectedGraph(168, 1656, 686));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        PrivatizeSpectrumBaseline(truth, PrivacyParams(2.5, 1), ++seed));
  }
}
BENCHMARK(BM_BaselineSpectrum);

}  // namespace
}  // namespace dpgraph
