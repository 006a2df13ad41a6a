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

#include "dpgraph/spectra.h"
#include "test_graphs.h"

namespace dpgraph {
namespace {

void BM_LaplacianSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = testing::ConnectedGraph(n, static_cast<std::int64_t>(n) * 10, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LaplacianSpectrum(g));
  }
}
BENCHMARK(BM_LaplacianSpectrum)->Arg(32)->Arg(168)->Arg(400)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace dpgraph
