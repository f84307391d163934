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

#include "ncg/biconnectivity.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

namespace ncg {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, std::size_t>>;

}  // namespace

int BiconnectivityDecomposition::component_of(Node u, Node v) const {
  const Edge e{std::min(u, v), std::max(u, v)};
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& edges = components[c].edges;
    if (std::binary_search(edges.begin(), edges.end(), e)) return static_cast<int>(c);
  }
  return -1;
}

std::vector<int> BiconnectivityDecomposition::nontrivial_containing(Node v) const {
  std::vector<int> out;
  for (int c : nontrivial) {
    if (contains(components[c].nodes, v)) out.push_back(c);
  }
  return out;
}

BiconnectivityDecomposition biconnectivity(const Graph& g) {
  const auto edges = g.edges();
  BoostGraph bg(static_cast<std::size_t>(g.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    boost::add_edge(static_cast<std::size_t>(edges[i].first),
                    static_cast<std::size_t>(edges[i].second), i, bg);
  }
  std::vector<std::size_t> label(edges.size());
  const std::size_t count = boost::biconnected_components(
      bg, boost::make_iterator_property_map(label.begin(), boost::get(boost::edge_index, bg)));
  std::vector<std::size_t> articulation;
  boost::articulation_points(bg, std::back_inserter(articulation));

  BiconnectivityDecomposition dec;
  dec.components.resize(count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& c = dec.components[label[i]];
    c.edges.push_back(edges[i]);
    c.nodes |= singleton(edges[i].first) | singleton(edges[i].second);
  }
  for (auto& c : dec.components) std::sort(c.edges.begin(), c.edges.end());
  std::sort(dec.components.begin(), dec.components.end(),
            [](const auto& a, const auto& b) { return a.edges.front() < b.edges.front(); });
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    if (dec.components[c].nontrivial()) {
      dec.nontrivial.push_back(static_cast<int>(c));
    } else {
      dec.bridges.push_back(dec.components[c].edges.front());
    }
  }
  std::sort(dec.bridges.begin(), dec.bridges.end());
  for (std::size_t v : articulation) dec.cut_vertices |= singleton(static_cast<Node>(v));
  return dec;
}

NodeSet hanging_tree(const Graph& g, const BiconnectivityDecomposition& dec, int component, Node u) {
  if (component < 0 || component >= static_cast<int>(dec.components.size()) ||
      !contains(dec.components[component].nodes, u)) {
    throw std::invalid_argument("node " + std::to_string(u) + " is not in the component");
  }
  const NodeSet keep = (g.nodes() & ~dec.components[component].nodes) | singleton(u);
  return reachable(g.induced(keep), u);
}

NodeSet component_purchases(const OwnedGraph& g, const BiconnectivityDecomposition& dec,
                            int component, Node v) {
  NodeSet out = 0;
  for_each_node(g.profile().purchases(v), [&](Node w) {
    if (dec.component_of(v, w) == component) out |= singleton(w);
  });
  return out;
}

int component_outdegree(const OwnedGraph& g, const BiconnectivityDecomposition& dec,
                        int component, Node v) {
  return popcount(component_purchases(g, dec, component, v));
}

int nonbridge_outdegree(const OwnedGraph& g, const BiconnectivityDecomposition& dec, Node v) {
  int count = 0;
  for_each_node(g.profile().purchases(v), [&](Node w) {
    const int c = dec.component_of(v, w);
    if (c >= 0 && dec.components[c].nontrivial()) ++count;
  });
  return count;
}

int component_diameter(const DistanceTable& dt, const BiconnectedComponent& c) {
  int diam = 0;
  for_each_node(c.nodes, [&](Node a) {
    for_each_node(c.nodes, [&](Node b) { diam = std::max(diam, dt(a, b)); });
  });
  return diam;
}

}  // namespace ncg
