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

#ifndef NCG_BICONNECTIVITY_HPP_
#define NCG_BICONNECTIVITY_HPP_

#include <vector>

#include "ncg/game.hpp"
#include "ncg/graph.hpp"

namespace ncg {

struct BiconnectedComponent {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted
  NodeSet nodes = 0;

  /// At least three nodes; otherwise the component is a single bridge.
  bool nontrivial() const { return popcount(nodes) >= 3; }
};

struct BiconnectivityDecomposition {
  /// Ordered by their smallest edge.
  std::vector<BiconnectedComponent> components;
  std::vector<Edge> bridges;
  NodeSet cut_vertices = 0;
  /// Indices into `components` of the nontrivial ones.
  std::vector<int> nontrivial;

  /// Component holding edge uv, or -1 if uv is not an edge.
  int component_of(Node u, Node v) const;
  /// Nontrivial components with v among their nodes.
  std::vector<int> nontrivial_containing(Node v) const;
};

BiconnectivityDecomposition biconnectivity(const Graph& g);

/// S(u): the component of u in the subgraph induced by (V \ V(H)) | {u}.
/// Throws std::invalid_argument unless u is a node of component H.
NodeSet hanging_tree(const Graph& g, const BiconnectivityDecomposition& dec, int component, Node u);

/// Links bought by v whose edge lies in some nontrivial component.
int nonbridge_outdegree(const OwnedGraph& g, const BiconnectivityDecomposition& dec, Node v);

/// deg_H^+(v) for one component H.
int component_outdegree(const OwnedGraph& g, const BiconnectivityDecomposition& dec,
                        int component, Node v);

/// Targets of the links v bought inside component H.
NodeSet component_purchases(const OwnedGraph& g, const BiconnectivityDecomposition& dec,
                            int component, Node v);

/// Largest distance between two nodes of the component. Shortest paths
/// between nodes of a biconnected component never leave it.
int component_diameter(const DistanceTable& dt, const BiconnectedComponent& c);

}  // namespace ncg

#endif  // NCG_BICONNECTIVITY_HPP_
