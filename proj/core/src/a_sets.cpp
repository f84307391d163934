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

#include "ncg/a_sets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncg {
namespace {

struct DagSets {
  NodeSet through = 0;               // every shortest path to u hits v (v excluded)
  std::vector<NodeSet> entries;      // neighbours of v through which z enters v
};

DagSets shortest_path_dag(const Graph& g, Node v, Node u) {
  const int n = g.size();
  const auto dist = bfs_distances(g, u);
  DagSets out;
  out.entries.assign(static_cast<std::size_t>(n), 0);
  if (dist[v] == kUnreachable) return out;

  std::vector<Node> order;
  for (Node z = 0; z < n; ++z) {
    if (dist[z] != kUnreachable) order.push_back(z);
  }
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return dist[a] < dist[b]; });

  std::vector<bool> avoids(static_cast<std::size_t>(n), false);
  for (Node z : order) {
    if (z == v) continue;
    if (z == u) {
      avoids[z] = true;
      continue;
    }
    NodeSet entry = 0;
    bool avoid = false;
    for_each_node(g.neighbors(z), [&](Node w) {
      if (dist[w] != dist[z] - 1) return;
      if (w == v) {
        entry |= singleton(z);
      } else if (avoids[w]) {
        avoid = true;
      } else {
        entry |= out.entries[w];
      }
    });
    avoids[z] = avoid;
    if (!avoid) {
      out.through |= singleton(z);
      out.entries[z] = entry;
    }
  }
  return out;
}

int diameter_of_component(const Graph& z, Node start) {
  const NodeSet comp = reachable(z, start);
  int diam = 0;
  for_each_node(comp, [&](Node a) {
    const auto d = bfs_distances(z, a);
    for_each_node(comp, [&](Node b) { diam = std::max(diam, d[b]); });
  });
  return diam;
}

}  // namespace

NodeSet through_set(const Graph& g, Node v, Node u) {
  const auto dag = shortest_path_dag(g, v, u);
  if (bfs_distances(g, u)[v] == kUnreachable) return 0;
  return dag.through | singleton(v);
}

int ASetFamily::max_component_diameter(NodeSet sub_targets) const {
  NodeSet idx = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (contains(sub_targets, targets[i])) idx |= singleton(static_cast<Node>(i));
  }
  const Graph z = crossing.induced(idx);
  int m = 0;
  NodeSet left = idx;
  while (left != 0) {
    const Node start = std::countr_zero(left);
    m = std::max(m, diameter_of_component(z, start));
    left &= ~reachable(z, start);
  }
  return m;
}

ASetFamily a_set_family(const OwnedGraph& g, Node v, NodeSet targets, Node u) {
  if ((targets & ~g.profile().purchases(v)) != 0) {
    throw std::invalid_argument("node " + std::to_string(v) + " did not buy every listed link");
  }
  const auto dag = shortest_path_dag(g.graph(), v, u);
  ASetFamily f;
  f.v = v;
  f.u = u;
  f.targets = to_vector(targets);
  f.a_i.assign(f.targets.size(), 0);
  for_each_node(dag.through, [&](Node z) {
    if ((dag.entries[z] & ~targets) == 0 && dag.entries[z] != 0) f.a |= singleton(z);
  });
  for (std::size_t i = 0; i < f.targets.size(); ++i) {
    for_each_node(f.a, [&](Node z) {
      if (contains(dag.entries[z], f.targets[i])) f.a_i[i] |= singleton(z);
    });
  }
  f.crossing = Graph(static_cast<int>(f.targets.size()));
  std::vector<NodeSet> reach(f.targets.size(), 0);
  for (std::size_t i = 0; i < f.targets.size(); ++i) {
    for_each_node(f.a_i[i], [&](Node x) { reach[i] |= g.graph().neighbors(x); });
  }
  for (std::size_t i = 0; i < f.targets.size(); ++i) {
    for (std::size_t j = i + 1; j < f.targets.size(); ++j) {
      if ((reach[i] & f.a_i[j]) != 0) f.crossing.add_edge(static_cast<Node>(i), static_cast<Node>(j));
    }
  }
  return f;
}

std::vector<Edge> crossings(const Graph& g, NodeSet x, NodeSet y) {
  std::vector<Edge> out;
  for_each_node(x, [&](Node a) {
    for_each_node(g.neighbors(a) & y, [&](Node b) { out.emplace_back(a, b); });
  });
  return out;
}

std::optional<Edge> crossing_remark_violation(const Graph& g, const BiconnectivityDecomposition& dec,
                                              int component, const ASetFamily& family) {
  const NodeSet h = dec.components.at(static_cast<std::size_t>(component)).nodes;
  for (NodeSet x : family.a_i) {
    for (const auto& e : crossings(g, x, g.nodes() & ~x)) {
      if (!contains(h, e.first) || !contains(h, e.second)) return e;
    }
  }
  return std::nullopt;
}

bool check_crossing_remark(const Graph& g, const BiconnectivityDecomposition& dec, int component,
                           const ASetFamily& family) {
  return !crossing_remark_violation(g, dec, component, family).has_value();
}

DeviationDelta prop2_bound(const Game& game, const OwnedGraph& g,
                           const BiconnectivityDecomposition& dec, int component,
                           const ASetFamily& family, NodeSet sold) {
  const auto& h = dec.components.at(static_cast<std::size_t>(component));
  if (!contains(h.nodes, family.u) || !contains(h.nodes, family.v)) {
    throw std::invalid_argument("prop2_bound needs u and v inside the component");
  }
  const NodeSet targets = to_set(family.targets);
  if ((sold & ~targets) != 0) throw std::invalid_argument("sold links must come from the family");
  for (Node t : family.targets) {
    if (dec.component_of(family.v, t) != component) {
      throw std::invalid_argument("family link outside the component");
    }
  }
  DeviationDelta out{Deviation{family.v, sold, singleton(family.u)}, Cost::infinity(),
                     DeltaKind::kUpperBound, "prop2"};
  const DistanceTable dt(g.graph());
  if (!dt.connected()) return out;
  const std::int64_t l = popcount(sold);
  const std::int64_t d_h = component_diameter(dt, h);
  const std::int64_t m = family.max_component_diameter(sold);
  out.delta = Cost(-game.alpha() * (l - 1) + game.n() + dt.distance_sum(family.u) -
                   dt.distance_sum(family.v) + 2 * d_h * popcount(family.a) * (1 + m));
  return out;
}

Rational wei_bound(const Graph& z) {
  Rational total(0);
  for (Node v = 0; v < z.size(); ++v) total += Rational(1, 1 + z.degree(v));
  return total;
}

namespace {

int max_independent(const Graph& z, NodeSet candidates) {
  if (candidates == 0) return 0;
  const Node v = std::countr_zero(candidates);
  const NodeSet rest = candidates & ~singleton(v);
  return std::max(max_independent(z, rest), 1 + max_independent(z, rest & ~z.neighbors(v)));
}

}  // namespace

int independence_number(const Graph& z) {
  if (z.size() > kIndependenceNumberLimit) {
    throw LimitExceeded("independence number limited to " + std::to_string(kIndependenceNumberLimit) +
                        " nodes");
  }
  return max_independent(z, z.nodes());
}

RemovalIncrease removal_distance_increase(const OwnedGraph& g, const BiconnectivityDecomposition& dec,
                                          int component, Node v) {
  const NodeSet bought = component_purchases(g, dec, component, v);
  StrategyProfile reduced = g.profile();
  reduced.set_purchases(v, reduced.purchases(v) & ~bought);
  const DistanceTable before(g.graph());
  const DistanceTable after(OwnedGraph(reduced).graph());
  RemovalIncrease out;
  out.removed = popcount(bought);
  out.component_diameter = component_diameter(before, dec.components.at(static_cast<std::size_t>(component)));
  for (Node a = 0; a < g.size(); ++a) {
    for (Node b = a + 1; b < g.size(); ++b) {
      if (before(a, b) == kUnreachable || after(a, b) == kUnreachable) continue;
      out.max_increase = std::max(out.max_increase, after(a, b) - before(a, b));
    }
  }
  out.ok = out.removed == 0 ? out.max_increase == 0
                            : out.max_increase < 2 * out.component_diameter * out.removed;
  return out;
}

}  // namespace ncg
