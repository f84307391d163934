// Copyright 2026 The ncgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCG_GRAPH_HPP_
#define NCG_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace ncg {

using Node = int;

/// Node subsets are 64-bit masks; every graph in this library has at most
/// kMaxNodes nodes.
using NodeSet = std::uint64_t;
inline constexpr int kMaxNodes = 64;

inline constexpr NodeSet singleton(Node v) { return NodeSet{1} << v; }
inline constexpr bool contains(NodeSet s, Node v) { return (s >> v) & 1U; }
inline constexpr int popcount(NodeSet s) { return std::popcount(s); }
inline constexpr NodeSet all_nodes(int n) {
  return n >= kMaxNodes ? ~NodeSet{0} : (NodeSet{1} << n) - 1;
}
std::vector<Node> to_vector(NodeSet s);
NodeSet to_set(const std::vector<Node>& nodes);

/// Calls f(v) for every member of s in increasing order.
template <typename F>
void for_each_node(NodeSet s, F&& f) {
  while (s != 0) {
    f(static_cast<Node>(std::countr_zero(s)));
    s &= s - 1;
  }
}

/// Lexicographic order on the sorted member lists of two sets.
bool lex_less(NodeSet a, NodeSet b);

using Edge = std::pair<Node, Node>;

/// Simple undirected graph on nodes 0..n-1 stored as adjacency masks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return n_; }
  NodeSet nodes() const { return all_nodes(n_); }
  NodeSet neighbors(Node u) const { return adj_[u]; }
  int degree(Node u) const { return popcount(adj_[u]); }
  bool has_edge(Node u, Node v) const { return contains(adj_[u], v); }
  int edge_count() const;

  void add_edge(Node u, Node v);
  void remove_edge(Node u, Node v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`; nodes keep their labels.
  Graph induced(NodeSet keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<NodeSet> adj_;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Node source);

/// Sum of distances from `source` to every other node, or -1
/// when some node is unreachable.
std::int64_t distance_sum(const Graph& g, Node source);

/// Nodes reachable from `source` (including it).
NodeSet reachable(const Graph& g, Node source);
bool is_connected(const Graph& g);

/// Pairwise hop distances with eccentricities and diameter. Disconnected
/// pairs hold kUnreachable, and so do the eccentricities and the diameter of
/// a disconnected graph.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(const Graph& g);

  int size() const { return n_; }
  int operator()(Node u, Node v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int eccentricity(Node u) const { return ecc_[u]; }
  int diameter() const { return diameter_; }
  bool connected() const { return diameter_ != kUnreachable; }

  /// Sum of distances from u; -1 when u cannot reach every node.
  std::int64_t distance_sum(Node u) const { return sums_[u]; }

  /// Members of layer `r` around u, i.e. nodes at distance exactly r.
  NodeSet layer(Node u, int r) const;

 private:
  int n_ = 0;
  std::vector<int> dist_;
  std::vector<int> ecc_;
  std::vector<std::int64_t> sums_;
  int diameter_ = 0;
};

DistanceTable all_pairs_distances(const Graph& g);

/// Graph with an edge uv whenever 1 <= d(u, v) <= p.
Graph graph_power(const Graph& g, int p);

}  // namespace ncg

#endif  // NCG_GRAPH_HPP_
