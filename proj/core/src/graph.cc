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


#include "dpgraph/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "dpgraph/errors.h"

namespace dpgraph {
namespace {

std::size_t WordCount(int n) {
  return static_cast<std::size_t>((NumPairs(n) + 63) / 64);
}

void RequireSameOrder(const Graph& a, const Graph& b) {
  if (a.num_nodes() != b.num_nodes()) {
    throw DomainError("graphs have different node counts (" +
                      std::to_string(a.num_nodes()) + " vs " +
                      std::to_string(b.num_nodes()) + ")");
  }
}

// Mask of the significant bits in the last word.
std::uint64_t TailMask(int n) {
  const auto rem = static_cast<unsigned>(NumPairs(n) % 64);
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("node count must be nonnegative");
  words_.assign(WordCount(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    auto [u, v] = std::minmax(e.u, e.v);
    if (u == v) {
      throw DomainError("self-loop at node " + std::to_string(u));
    }
    if (u < 1 || v > n) {
      throw DomainError("edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "} outside [1, " +
                        std::to_string(n) + "]");
    }
    const std::int64_t k = PairIndex(n, u, v);
    words_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
}

Graph Graph::FromPairBits(int n, std::vector<std::uint64_t> words) {
  Graph g(n);
  if (words.size() != g.words_.size()) {
    throw DomainError("pair bitset has " + std::to_string(words.size()) +
                      " words, expected " + std::to_string(g.words_.size()));
  }
  if (!words.empty() && (words.back() & ~TailMask(n)) != 0) {
    throw DomainError("pair bitset has bits set past the last pair");
  }
  g.words_ = std::move(words);
  return g;
}

Graph Graph::FromPairMask(int n, std::uint64_t mask) {
  if (NumPairs(n) > 64) {
    throw DomainError("FromPairMask requires at most 64 node pairs");
  }
  std::vector<std::uint64_t> words;
  if (NumPairs(n) > 0) words.push_back(mask);
  return FromPairBits(n, std::move(words));
}

Graph Graph::Complete(int n) { return Complement(Graph(n)); }

std::int64_t Graph::num_edges() const {
  std::int64_t count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool Graph::HasEdge(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 1 || v > n_ || u == v) return false;
  return HasPair(PairIndex(n_, u, v));
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges()));
  std::int64_t k = 0;
  for (int u = 1; u < n_; ++u) {
    for (int v = u + 1; v <= n_; ++v, ++k) {
      if (HasPair(k)) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::Degrees() const {
  std::vector<int> degree(static_cast<std::size_t>(n_), 0);
  std::int64_t k = 0;
  for (int u = 1; u < n_; ++u) {
    for (int v = u + 1; v <= n_; ++v, ++k) {
      if (HasPair(k)) {
        ++degree[u - 1];
        ++degree[v - 1];
      }
    }
  }
  return degree;
}

std::uint64_t Graph::PairMask() const {
  if (num_pairs() > 64) {
    throw DomainError("PairMask requires at most 64 node pairs");
  }
  return words_.empty() ? 0 : words_.front();
}

PrivacyParams::PrivacyParams(double epsilon, int adjacency)
    : epsilon_(epsilon), adjacency_(adjacency) {
  if (std::isnan(epsilon) || epsilon < 0) {
    throw DomainError("epsilon must be >= 0");
  }
  if (adjacency < 1) {
    throw DomainError("adjacency parameter must be >= 1");
  }
}

std::int64_t EdgeDistance(const Graph& a, const Graph& b) {
  RequireSameOrder(a, b);
  const auto wa = a.pair_words();
  const auto wb = b.pair_words();
  std::int64_t distance = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    distance += std::popcount(wa[i] ^ wb[i]);
  }
  return distance;
}

bool IsAdjacent(const Graph& a, const Graph& b, int adjacency) {
  return EdgeDistance(a, b) <= adjacency;
}

std::int64_t Utility(const Graph& sensitive, const Graph& candidate) {
  return -EdgeDistance(sensitive, candidate);
}

Graph Complement(const Graph& g) {
  std::vector<std::uint64_t> words(g.pair_words().begin(), g.pair_words().end());
  for (auto& w : words) w = ~w;
  if (!words.empty()) words.back() &= TailMask(g.num_nodes());
  return Graph::FromPairBits(g.num_nodes(), std::move(words));
}

IntMatrix Laplacian(const Graph& g) {
  const int n = g.num_nodes();
  IntMatrix lap(n);
  for (const Edge& e : g.Edges()) {
    lap.at(e.u, e.v) = -1;
    lap.at(e.v, e.u) = -1;
    ++lap.at(e.u, e.u);
    ++lap.at(e.v, e.v);
  }
  return lap;
}

}  // namespace dpgraph
