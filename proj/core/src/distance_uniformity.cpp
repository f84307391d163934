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

#include "ncg/distance_uniformity.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace ncg {
namespace {

// hist[u][d] = |A_d(u)| for d in [0, diam].
std::vector<std::vector<int>> layer_histograms(const DistanceTable& dt) {
  const int n = dt.size();
  std::vector<std::vector<int>> hist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(dt.diameter()) + 1, 0));
  for (Node u = 0; u < n; ++u) {
    for (Node z = 0; z < n; ++z) ++hist[u][dt(u, z)];
  }
  return hist;
}

// |{z : |d(u, z) - r| <= i}| from a histogram.
int window_count(const std::vector<int>& hist, int r, int i) {
  int total = 0;
  const int lo = std::max(0, r - i);
  const int hi = std::min(static_cast<int>(hist.size()) - 1, r + i);
  for (int d = lo; d <= hi; ++d) total += hist[d];
  return total;
}

void check_epsilon(const Rational& epsilon) {
  if (!(epsilon > Rational(0) && epsilon < Rational(1))) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

std::vector<int> LayerProfile::sizes() const {
  std::vector<int> out;
  out.reserve(layers.size());
  for (NodeSet s : layers) out.push_back(popcount(s));
  return out;
}

LayerProfile layers(const Graph& g, Node u) {
  LayerProfile p{u, {}, 0};
  const auto dist = bfs_distances(g, u);
  for (Node z = 0; z < g.size(); ++z) {
    if (dist[z] == kUnreachable) {
      p.unreachable |= singleton(z);
      continue;
    }
    if (static_cast<int>(p.layers.size()) <= dist[z]) p.layers.resize(static_cast<std::size_t>(dist[z]) + 1, 0);
    p.layers[dist[z]] |= singleton(z);
  }
  return p;
}

NodeSet r_window(const DistanceTable& dt, Node u, Node v, int i) {
  return r_window_by_index(dt, v, dt(u, v), i);
}

NodeSet r_window_by_index(const DistanceTable& dt, Node v, int r, int i) {
  if (i < 0) throw std::invalid_argument("window half-width must be >= 0");
  NodeSet out = 0;
  for (Node z = 0; z < dt.size(); ++z) {
    const int d = dt(z, v);
    if (d != kUnreachable && std::abs(static_cast<long long>(d) - r) <= i) out |= singleton(z);
  }
  return out;
}

NodeSet m_window(const DistanceTable& dt, Node v1, Node v2, int i) {
  if (i < 0) throw std::invalid_argument("window half-width must be >= 0");
  NodeSet out = 0;
  for (Node z = 0; z < dt.size(); ++z) {
    const int a = dt(z, v1);
    const int b = dt(z, v2);
    if (a == kUnreachable || b == kUnreachable) continue;
    if (std::abs(a - b) <= i) out |= singleton(z);
  }
  return out;
}

WindowInequalityResult check_window_inequality(const Graph& g, const Rational& alpha) {
  const DistanceTable dt(g);
  const int n = g.size();
  WindowInequalityResult best;
  if (!dt.connected()) {
    best.violating = g.nodes();
    return best;
  }
  const int d = dt.diameter();
  const Rational bound = Rational(std::int64_t{n} * d - n) - alpha * 4;
  const auto hist = layer_histograms(dt);
  std::optional<WindowInequalityResult> fallback;
  for (int r = 0; r <= d; ++r) {
    WindowInequalityResult cur;
    cur.r = r;
    cur.bound = bound;
    cur.slack.resize(static_cast<std::size_t>(n));
    bool first = true;
    for (Node u = 0; u < n; ++u) {
      std::int64_t sum = 0;
      for (int i = 2; i <= d; ++i) sum += window_count(hist[u], r, i);
      cur.slack[u] = Rational(sum) - bound;
      if (cur.slack[u] < Rational(0)) cur.violating |= singleton(u);
      if (first || cur.slack[u] < cur.min_slack) cur.min_slack = cur.slack[u];
      first = false;
    }
    cur.ok = cur.violating == 0;
    if (cur.ok) return cur;
    if (!fallback || fallback->min_slack < cur.min_slack) fallback = cur;
  }
  return *fallback;
}

int window_radius(const Rational& alpha, int n, const Rational& epsilon) {
  return static_cast<int>(ceil(alpha * 4 / (Rational(n) * epsilon) + 1));
}

UniformityCertificate uniformity_certificate(const Graph& g, const Rational& alpha,
                                             const Rational& epsilon) {
  check_epsilon(epsilon);
  const int n = g.size();
  const DistanceTable dt(g);
  UniformityCertificate best{false, epsilon, 0, window_radius(alpha, n, epsilon), {}};
  if (!dt.connected()) return best;
  const Rational need = Rational(n) * (1 - epsilon);
  const auto hist = layer_histograms(dt);
  int best_min = -1;
  for (int r = std::min(1, dt.diameter()); r <= dt.diameter(); ++r) {
    std::vector<int> counts(static_cast<std::size_t>(n));
    int min_count = n;
    for (Node u = 0; u < n; ++u) {
      counts[u] = window_count(hist[u], r, best.x);
      min_count = std::min(min_count, counts[u]);
    }
    if (Rational(min_count) >= need) return {true, epsilon, r, best.x, counts};
    if (min_count > best_min) {
      best_min = min_count;
      best.r = r;
      best.per_node_counts = counts;
    }
  }
  return best;
}

UniformityResult is_distance_uniform(const Graph& g, const Rational& epsilon, UniformityMode mode) {
  check_epsilon(epsilon);
  const DistanceTable dt(g);
  if (!dt.connected()) return {};
  const Rational need = Rational(g.size()) * (1 - epsilon);
  const auto hist = layer_histograms(dt);
  const int d = dt.diameter();
  for (int r = 0; r <= d; ++r) {
    bool all = true;
    for (Node u = 0; u < g.size() && all; ++u) {
      int size = hist[u][r];
      if (mode == UniformityMode::kAlmostUniform && r + 1 <= d) size = std::max(size, hist[u][r + 1]);
      all = Rational(size) >= need;
    }
    if (all) return {true, r};
  }
  return {};
}

}  // namespace ncg
