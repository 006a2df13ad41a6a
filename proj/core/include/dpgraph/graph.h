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


#ifndef DPGRAPH_GRAPH_H_
#define DPGRAPH_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace dpgraph {

// An unordered node pair {u, v} with 1 <= u < v <= n.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of unordered node pairs on n nodes, n(n-1)/2.
constexpr std::int64_t NumPairs(int n) {
  return n < 2 ? 0 : static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Position of the pair (u, v), u < v, in lexicographic pair order:
// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n). Nodes are 1-based.
constexpr std::int64_t PairIndex(int n, int u, int v) {
  const std::int64_t i = u - 1;
  return i * (2 * static_cast<std::int64_t>(n) - i - 1) / 2 + (v - u - 1);
}

// A simple undirected unweighted graph on nodes [1, n].
//
// The edge set is a dense bitset with one bit per unordered pair, laid out in
// lexicographic pair order. Instances are immutable once constructed.
// Equality compares n and the edge set only.
class Graph {
 public:
  // Empty graph on `n` nodes. n must be >= 0.
  explicit Graph(int n = 0);

  // Graph on `n` nodes with the given edges. Endpoints are canonicalized to
  // u < v and duplicates collapse. Throws DomainError on self-loops or
  // endpoints outside [1, n].
  Graph(int n, std::span<const Edge> edges);

  // Builds a graph directly from its pair bitset (`NumPairs(n)` significant
  // bits, lexicographic pair order, bit k of word k/64). Bits past the last
  // pair must be zero.
  static Graph FromPairBits(int n, std::vector<std::uint64_t> words);

  // Graph whose pair bitset is the low NumPairs(n) bits of `mask`.
  // Requires NumPairs(n) <= 64.
  static Graph FromPairMask(int n, std::uint64_t mask);

  static Graph Complete(int n);

  int num_nodes() const { return n_; }
  std::int64_t num_pairs() const { return NumPairs(n_); }
  std::int64_t num_edges() const;

  bool HasEdge(int u, int v) const;
  bool HasPair(std::int64_t pair_index) const {
    return (words_[pair_index >> 6] >> (pair_index & 63)) & 1U;
  }

  // Edges in lexicographic order.
  std::vector<Edge> Edges() const;
  // Degree of node i at position i-1.
  std::vector<int> Degrees() const;

  // Low-level view of the pair bitset.
  std::span<const std::uint64_t> pair_words() const { return words_; }
  // The pair bitset as a single word. Requires NumPairs(n) <= 64.
  std::uint64_t PairMask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Privacy budget epsilon >= 0 (may be +infinity) and adjacency parameter
// A >= 1: graphs whose edge sets differ in at most A pairs are adjacent.
class PrivacyParams {
 public:
  // Throws DomainError if epsilon is negative or NaN, or adjacency < 1.
  PrivacyParams(double epsilon, int adjacency);

  double epsilon() const { return epsilon_; }
  int adjacency() const { return adjacency_; }

 private:
  double epsilon_;
  int adjacency_;
};

// Size of the symmetric difference of the edge sets. Throws DomainError if the
// node counts differ.
std::int64_t EdgeDistance(const Graph& a, const Graph& b);

// True iff EdgeDistance(a, b) <= adjacency.
bool IsAdjacent(const Graph& a, const Graph& b, int adjacency);

// Utility of releasing `candidate` for the sensitive graph `sensitive`: the
// negated edge distance. Ranges over [-NumPairs(n), 0].
std::int64_t Utility(const Graph& sensitive, const Graph& candidate);

Graph Complement(const Graph& g);

// Dense symmetric integer matrix indexed by 1-based node ids.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  int at(int row, int col) const { return entries_[Offset(row, col)]; }
  int& at(int row, int col) { return entries_[Offset(row, col)]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t Offset(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  int n_;
  std::vector<int> entries_;
};

// Graph Laplacian L = D - Z.
IntMatrix Laplacian(const Graph& g);

}  // namespace dpgraph

#endif  // DPGRAPH_GRAPH_H_
