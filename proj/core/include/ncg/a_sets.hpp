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

#ifndef NCG_A_SETS_HPP_
#define NCG_A_SETS_HPP_

#include <optional>
#include <vector>

#include "ncg/biconnectivity.hpp"
#include "ncg/deviation.hpp"
#include "ncg/game.hpp"

namespace ncg {

/// Nodes z, v included, such that every shortest path from z to u passes
/// through v. Empty if v cannot reach u.
NodeSet through_set(const Graph& g, Node v, Node u);

/// A-sets of v with respect to u for a chosen set of links v bought.
///
/// Built on the shortest-path DAG toward u: z is in `a` when every shortest
/// z-u path passes through v and enters v from one of `targets`; z is in
/// `a_i[i]` when, in addition, some such path enters v from targets[i].
struct ASetFamily {
  Node v = 0;
  Node u = 0;
  std::vector<Node> targets;  // v_1..v_k in increasing order
  NodeSet a = 0;
  std::vector<NodeSet> a_i;
  /// Crossing graph Z: vertex i stands for targets[i]; i ~ j iff some edge
  /// joins a_i[i] and a_i[j].
  Graph crossing;

  /// M for a sub-family (given as a set of target nodes): the largest
  /// diameter among connected components of Z restricted to it.
  int max_component_diameter(NodeSet sub_targets) const;
};

/// Throws std::invalid_argument if v did not buy every link in `targets`.
ASetFamily a_set_family(const OwnedGraph& g, Node v, NodeSet targets, Node u);

/// Edges xy with x in `x` and y in `y`.
std::vector<Edge> crossings(const Graph& g, NodeSet x, NodeSet y);

/// First crossing between some a_i[j] and its complement with an endpoint
/// outside component H, if any.
std::optional<Edge> crossing_remark_violation(const Graph& g, const BiconnectivityDecomposition& dec,
                                              int component, const ASetFamily& family);

/// True iff every crossing between an A^j set and its complement has both
/// endpoints in V(H). Requires v in V(H) and H nontrivial.
bool check_crossing_remark(const Graph& g, const BiconnectivityDecomposition& dec, int component,
                           const ASetFamily& family);

/// Upper bound on v selling the links to `sold` (a subset of the family's
/// targets) and buying a link to the family's u:
///   -(l-1) alpha + n + D(u) - D(v) + 2 d_H |A| (1 + M_sold)
/// Requires u, v in V(H) and every family link inside H.
DeviationDelta prop2_bound(const Game& game, const OwnedGraph& g,
                           const BiconnectivityDecomposition& dec, int component,
                           const ASetFamily& family, NodeSet sold);

/// sum over vertices of 1 / (1 + deg).
Rational wei_bound(const Graph& z);

inline constexpr int kIndependenceNumberLimit = 20;

/// Exhaustive; throws LimitExceeded above kIndependenceNumberLimit nodes.
int independence_number(const Graph& z);

struct RemovalIncrease {
  int removed = 0;       // deg_H^+(v)
  int max_increase = 0;  // over pairs connected before and after
  int component_diameter = 0;
  /// removed == 0 ? max_increase == 0 : max_increase < 2 d_H removed.
  bool ok = true;
};

/// Deletes the links v bought inside component H and measures the largest
/// distance increase between pairs that stay connected.
RemovalIncrease removal_distance_increase(const OwnedGraph& g, const BiconnectivityDecomposition& dec,
                                          int component, Node v);

}  // namespace ncg

#endif  // NCG_A_SETS_HPP_
