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

#include "dpgraph/oracle.h"

namespace dpgraph {
namespace {

void BM_ComputeExactDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = Graph::Complete(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeExactDistribution(g, PrivacyParams(1.0, 1)));
  }
}
BENCHMARK(BM_ComputeExactDistribution)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_AuditDpRatio(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AuditDpRatio(n, PrivacyParams(1.0, 2)));
  }
}
BENCHMARK(BM_AuditDpRatio)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dpgraph
