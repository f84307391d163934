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

#include "ncg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncg {

std::vector<Node> to_vector(NodeSet s) {
  std::vector<Node> out;
  out.reserve(popcount(s));
  for_each_node(s, [&](Node v) { out.push_back(v); });
  return out;
}

NodeSet to_set(const std::vector<Node>& nodes) {
  NodeSet s = 0;
  for (Node v : nodes) s |= singleton(v);
  return s;
}

bool lex_less(NodeSet a, NodeSet b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxNodes) {
    throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (NodeSet a : adj_) twice += popcount(a);
  return twice / 2;
}

void Graph::add_edge(Node u, Node v) {
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

void Graph::remove_edge(Node u, Node v) {
  adj_[u] &= ~singleton(v);
  adj_[v] &= ~singleton(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Node u = 0; u < n_; ++u) {
    for_each_node(adj_[u] & ~all_nodes(u + 1), [&](Node v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::induced(NodeSet keep) const {
  Graph h(n_);
  for (Node u = 0; u < n_; ++u) {
    if (contains(keep, u)) h.adj_[u] = adj_[u] & keep;
  }
  return h;
}

std::vector<int> bfs_distances(const Graph& g, Node source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
  NodeSet visited = singleton(source);
  NodeSet frontier = visited;
  dist[source] = 0;
  for (int d = 1; frontier != 0; ++d) {
    NodeSet next = 0;
    for_each_node(frontier, [&](Node v) { next |= g.neighbors(v); });
    next &= ~visited;
    for_each_node(next, [&](Node v) { dist[v] = d; });
    visited |= next;
    frontier = next;
  }
  return dist;
}

std::int64_t distance_sum(const Graph& g, Node source) {
  NodeSet visited = singleton(source);
  NodeSet frontier = visited;
  std::int64_t total = 0;
  for (std::int64_t d = 1; frontier != 0; ++d) {
    NodeSet next = 0;
    for_each_node(frontier, [&](Node v) { next |= g.neighbors(v); });
    next &= ~visited;
    total += d * popcount(next);
    visited |= next;
    frontier = next;
  }
  return visited == g.nodes() ? total : -1;
}

NodeSet reachable(const Graph& g, Node source) {
  NodeSet visited = singleton(source);
  NodeSet frontier = visited;
  while (frontier != 0) {
    NodeSet next = 0;
    for_each_node(frontier, [&](Node v) { next |= g.neighbors(v); });
    frontier = next & ~visited;
    visited |= next;
  }
  return visited;
}

bool is_connected(const Graph& g) { return g.size() == 0 || reachable(g, 0) == g.nodes(); }

DistanceTable::DistanceTable(const Graph& g)
    : n_(g.size()),
      dist_(static_cast<std::size_t>(n_) * n_, kUnreachable),
      ecc_(static_cast<std::size_t>(n_), 0),
      sums_(static_cast<std::size_t>(n_), 0) {
  diameter_ = 0;
  for (Node u = 0; u < n_; ++u) {
    const auto row = bfs_distances(g, u);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(u) * n_);
    std::int64_t sum = 0;
    int ecc = 0;
    for (int d : row) {
      if (d == kUnreachable) {
        ecc = kUnreachable;
        sum = -1;
        break;
      }
      ecc = std::max(ecc, d);
      sum += d;
    }
    ecc_[u] = ecc;
    sums_[u] = sum;
    diameter_ = std::max(diameter_, ecc);
  }
}

NodeSet DistanceTable::layer(Node u, int r) const {
  NodeSet s = 0;
  for (Node v = 0; v < n_; ++v) {
    if ((*this)(u, v) == r) s |= singleton(v);
  }
  return s;
}

DistanceTable all_pairs_distances(const Graph& g) { return DistanceTable(g); }

Graph graph_power(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("graph power exponent must be >= 1");
  const DistanceTable dt(g);
  Graph out(g.size());
  for (Node u = 0; u < g.size(); ++u) {
    for (Node v = u + 1; v < g.size(); ++v) {
      if (dt(u, v) <= p) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace ncg
