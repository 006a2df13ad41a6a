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


// Small graph fixtures shared by the test binaries.

#ifndef DPGRAPH_TESTS_TEST_GRAPHS_H_
#define DPGRAPH_TESTS_TEST_GRAPHS_H_

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "dpgraph/graph.h"

namespace dpgraph::testing {

// The three 4-node graphs of the adjacency example (A = 2): the complete
// graph, the 4-cycle (distance 2 from it) and a 3-edge path (distance 3).
inline Graph CompleteK4() {
  const std::vector<Edge> e = {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}};
  return Graph(4, e);
}
inline Graph FourCycle() {
  const std::vector<Edge> e = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  return Graph(4, e);
}
inline Graph ThreeEdgePath() {
  const std::vector<Edge> e = {{2, 3}, {3, 4}, {1, 4}};
  return Graph(4, e);
}

inline Graph Path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

// Each pair is an edge independently with probability `density`.
inline Graph RandomGraph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) e.push_back({u, v});
    }
  }
  return Graph(n, e);
}

// A connected graph with exactly `edges` edges: a Hamiltonian path plus
// distinct random chords.
inline Graph ConnectedGraph(int n, std::int64_t edges, std::uint64_t seed) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  std::vector<Edge> chords;
  for (int u = 1; u < n; ++u) {
    for (int v = u + 2; v <= n; ++v) chords.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(chords.begin(), chords.end(), rng);
  for (std::size_t i = 0; static_cast<std::int64_t>(e.size()) < edges; ++i) {
    e.push_back(chords[i]);
  }
  return Graph(n, e);
}

}  // namespace dpgraph::testing

#endif  // DPGRAPH_TESTS_TEST_GRAPHS_H_
