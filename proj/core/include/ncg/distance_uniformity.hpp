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

#ifndef NCG_DISTANCE_UNIFORMITY_HPP_
#define NCG_DISTANCE_UNIFORMITY_HPP_

#include <vector>

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"

namespace ncg {

/// Distance layers A_0(u), A_1(u), ... up to the eccentricity of u.
struct LayerProfile {
  Node source = 0;
  std::vector<NodeSet> layers;
  NodeSet unreachable = 0;

  std::vector<int> sizes() const;
};

LayerProfile layers(const Graph& g, Node u);

/// R^i_u(v): nodes z with |d(z, v) - d(u, v)| <= i.
NodeSet r_window(const DistanceTable& dt, Node u, Node v, int i);

/// R^i_r(v): nodes z with |d(z, v) - r| <= i.
NodeSet r_window_by_index(const DistanceTable& dt, Node v, int r, int i);

/// M_i(v1, v2): nodes z with |d(z, v1) - d(z, v2)| <= i.
NodeSet m_window(const DistanceTable& dt, Node v1, Node v2, int i);

/// Outcome of searching for one distance index r such that every node u
/// satisfies  sum_{i=2..d} |R^i_r(u)|  >=  n d - n - 4 alpha.
struct WindowInequalityResult {
  bool ok = false;
  /// The smallest satisfying r, or on failure the r with the largest
  /// minimum slack.
  int r = 0;
  Rational bound;
  std::vector<Rational> slack;
  Rational min_slack;
  NodeSet violating = 0;
};

/// Requires a connected graph; a disconnected one yields ok = false.
WindowInequalityResult check_window_inequality(const Graph& g, const Rational& alpha);

/// ceil((4 alpha / n) / epsilon + 1).
int window_radius(const Rational& alpha, int n, const Rational& epsilon);

/// A distance index r and radius x such that every node sees at least
/// n(1 - epsilon) nodes at distances in [r - x, r + x].
struct UniformityCertificate {
  bool ok = false;
  Rational epsilon;
  int r = 0;
  int x = 0;
  /// Per node, the number of nodes inside the window at r (the best r on
  /// failure).
  std::vector<int> per_node_counts;
};

/// Scans r from 1 (0 for a single node) up to the diameter and returns the
/// first r that works. Windows only grow when r moves from 0 to 1, so
/// skipping r = 0 loses nothing. Throws std::invalid_argument unless
/// 0 < epsilon < 1.
UniformityCertificate uniformity_certificate(const Graph& g, const Rational& alpha,
                                             const Rational& epsilon);

enum class UniformityMode { kUniform, kAlmostUniform };

struct UniformityResult {
  bool ok = false;
  int r = -1;
};

/// epsilon-distance-uniform: some r has |A_r(u)| >= n(1 - epsilon) for all
/// u. Almost-uniform relaxes this to max(|A_r(u)|, |A_{r+1}(u)|).
UniformityResult is_distance_uniform(const Graph& g, const Rational& epsilon, UniformityMode mode);

}  // namespace ncg

#endif  // NCG_DISTANCE_UNIFORMITY_HPP_
