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

#include "ncg/constructions.hpp"

#include <charconv>
#include <random>
#include <stdexcept>

#include "ncg/biconnectivity.hpp"

namespace ncg {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Orientation resolve(Orientation o, Orientation fallback) {
  return o == Orientation::kDefault ? fallback : o;
}

// Adds link (a, b) bought by the lower endpoint, or by the higher one.
void add_ordered(StrategyProfile& s, Node a, Node b, bool lower_buys) {
  const Node lo = std::min(a, b);
  const Node hi = std::max(a, b);
  if (lower_buys) {
    s.add_purchase(lo, hi);
  } else {
    s.add_purchase(hi, lo);
  }
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Edge> pruefer_edges(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int a : seq) {
    require(a >= 0 && a < n, "Pruefer entry out of range");
    ++degree[a];
  }
  std::vector<Edge> edges;
  for (int a : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
    --degree[leaf];
    --degree[a];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
    }
  }
  return edges;
}

StrategyProfile orient_tree(int n, const std::vector<Edge>& edges, Orientation o) {
  Graph g(n);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  const auto depth = bfs_distances(g, 0);
  StrategyProfile s(n);
  for (const auto& [a, b] : edges) {
    const Node child = depth[a] > depth[b] ? a : b;
    const Node parent = child == a ? b : a;
    if (o == Orientation::kChildBuys) {
      s.add_purchase(child, parent);
    } else {
      s.add_purchase(parent, child);
    }
  }
  return s;
}

int parse_int(std::string_view text, std::string_view key) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && ptr == text.data() + text.size(),
          "bad integer for '" + std::string(key) + "': '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::kStar: return "star";
    case ConstructionKind::kClique: return "clique";
    case ConstructionKind::kPath: return "path";
    case ConstructionKind::kCycle: return "cycle";
    case ConstructionKind::kTreeFromPruefer: return "tree_from_pruefer";
    case ConstructionKind::kCliqueOfStars: return "clique_of_stars";
    case ConstructionKind::kRandom: return "random";
  }
  return "unknown";
}

ConstructionKind parse_construction_kind(std::string_view name) {
  for (auto k : {ConstructionKind::kStar, ConstructionKind::kClique, ConstructionKind::kPath,
                 ConstructionKind::kCycle, ConstructionKind::kTreeFromPruefer,
                 ConstructionKind::kCliqueOfStars, ConstructionKind::kRandom}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::kDefault: return "default";
    case Orientation::kLeavesBuy: return "leaves_buy";
    case Orientation::kCenterBuys: return "center_buys";
    case Orientation::kLowerBuys: return "lower_buys";
    case Orientation::kHigherBuys: return "higher_buys";
    case Orientation::kForward: return "forward";
    case Orientation::kChildBuys: return "child_buys";
    case Orientation::kParentBuys: return "parent_buys";
    case Orientation::kSingleBuyer: return "single_buyer";
    case Orientation::kLowerIndex: return "lower_index";
  }
  return "unknown";
}

Orientation parse_orientation(std::string_view name) {
  for (auto o : {Orientation::kDefault, Orientation::kLeavesBuy, Orientation::kCenterBuys,
                 Orientation::kLowerBuys, Orientation::kHigherBuys, Orientation::kForward,
                 Orientation::kChildBuys, Orientation::kParentBuys, Orientation::kSingleBuyer,
                 Orientation::kLowerIndex}) {
    if (to_string(o) == name) return o;
  }
  throw std::invalid_argument("unknown orientation '" + std::string(name) + "'");
}

ConstructionSpec ConstructionSpec::parse(ConstructionKind kind, std::string_view params,
                                         std::uint64_t seed) {
  ConstructionSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  std::string last_key;
  std::size_t pos = 0;
  while (pos <= params.size() && !params.empty()) {
    std::size_t end = params.find(',', pos);
    if (end == std::string_view::npos) end = params.size();
    const std::string_view token = params.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty()) continue;
    const auto eq = token.find('=');
    std::string key;
    std::string_view value;
    if (eq == std::string_view::npos) {
      require(last_key == "seq", "expected key=value, got '" + std::string(token) + "'");
      key = "seq";
      value = token;
    } else {
      key = std::string(token.substr(0, eq));
      value = token.substr(eq + 1);
    }
    last_key = key;
    if (key == "n") {
      spec.n = parse_int(value, key);
    } else if (key == "k") {
      spec.k = parse_int(value, key);
    } else if (key == "l") {
      spec.l = parse_int(value, key);
    } else if (key == "seq") {
      if (!value.empty()) spec.pruefer.push_back(parse_int(value, key));
    } else if (key == "p") {
      spec.edge_prob = std::stod(std::string(value));
    } else if (key == "orientation") {
      spec.orientation = parse_orientation(value);
    } else if (key == "alpha") {
      spec.alpha = parse_rational(value);
    } else {
      throw std::invalid_argument("unknown parameter '" + key + "'");
    }
  }
  return spec;
}

StrategyProfile star(int n, Orientation o) {
  require(n >= 1, "star needs n >= 1");
  o = resolve(o, Orientation::kLeavesBuy);
  require(o == Orientation::kLeavesBuy || o == Orientation::kCenterBuys, "bad star orientation");
  StrategyProfile s(n);
  for (Node v = 1; v < n; ++v) {
    if (o == Orientation::kLeavesBuy) {
      s.add_purchase(v, 0);
    } else {
      s.add_purchase(0, v);
    }
  }
  return s;
}

StrategyProfile clique(int n, Orientation o) {
  require(n >= 1, "clique needs n >= 1");
  o = resolve(o, Orientation::kLowerBuys);
  require(o == Orientation::kLowerBuys || o == Orientation::kHigherBuys, "bad clique orientation");
  StrategyProfile s(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) add_ordered(s, u, v, o == Orientation::kLowerBuys);
  }
  return s;
}

StrategyProfile path(int n, Orientation o) {
  require(n >= 1, "path needs n >= 1");
  o = resolve(o, Orientation::kLowerBuys);
  require(o == Orientation::kLowerBuys || o == Orientation::kHigherBuys, "bad path orientation");
  StrategyProfile s(n);
  for (Node u = 0; u + 1 < n; ++u) add_ordered(s, u, u + 1, o == Orientation::kLowerBuys);
  return s;
}

StrategyProfile cycle(int n, Orientation o) {
  require(n >= 3, "cycle needs n >= 3");
  o = resolve(o, Orientation::kForward);
  StrategyProfile s(n);
  for (Node u = 0; u < n; ++u) {
    const Node v = (u + 1) % n;
    if (o == Orientation::kForward) {
      s.add_purchase(u, v);
    } else {
      require(o == Orientation::kLowerBuys || o == Orientation::kHigherBuys, "bad cycle orientation");
      add_ordered(s, u, v, o == Orientation::kLowerBuys);
    }
  }
  return s;
}

StrategyProfile tree_from_pruefer(const std::vector<int>& sequence, Orientation o) {
  o = resolve(o, Orientation::kChildBuys);
  require(o == Orientation::kChildBuys || o == Orientation::kParentBuys, "bad tree orientation");
  const int n = static_cast<int>(sequence.size()) + 2;
  require(n <= kMaxNodes, "tree too large");
  return orient_tree(n, pruefer_edges(sequence), o);
}

StrategyProfile clique_of_stars(int k, int l, Orientation o) {
  require(k >= 2 && l >= 1, "clique of stars needs k >= 2 and l >= 1");
  require(k * l <= kMaxNodes, "clique of stars too large");
  o = resolve(o, Orientation::kSingleBuyer);
  require(o == Orientation::kSingleBuyer || o == Orientation::kLowerIndex,
          "bad clique-of-stars orientation");
  StrategyProfile s(k * l);
  for (int c = 0; c < k; ++c) {
    const Node center = c * l;
    for (int j = 1; j < l; ++j) s.add_purchase(center, center + j);
    for (int d = c + 1; d < k; ++d) {
      if (o == Orientation::kSingleBuyer && d == k - 1) {
        s.add_purchase(d * l, center);
      } else {
        s.add_purchase(center, d * l);
      }
    }
  }
  return s;
}

StrategyProfile random_profile(int n, double edge_prob, std::uint64_t seed) {
  require(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  StrategyProfile s(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      const bool present = unit(rng) < edge_prob;
      const bool lower_buys = (rng() & 1U) == 0;
      if (present) add_ordered(s, u, v, lower_buys);
    }
  }
  return s;
}

StrategyProfile random_biconnected(int n, std::uint64_t seed, double edge_prob, int max_attempts) {
  require(n >= 3, "random_biconnected needs n >= 3");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    StrategyProfile s = random_profile(n, edge_prob, splitmix(seed * 1000003ULL + attempt));
    const auto dec = biconnectivity(OwnedGraph(s).graph());
    for (int c : dec.nontrivial) {
      if (2 * popcount(dec.components[c].nodes) >= n) return s;
    }
  }
  throw LimitExceeded("random_biconnected: no sample after " + std::to_string(max_attempts) + " attempts");
}

StrategyProfile make(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::kStar: return star(spec.n, spec.orientation);
    case ConstructionKind::kClique: return clique(spec.n, spec.orientation);
    case ConstructionKind::kPath: return path(spec.n, spec.orientation);
    case ConstructionKind::kCycle: return cycle(spec.n, spec.orientation);
    case ConstructionKind::kTreeFromPruefer: return tree_from_pruefer(spec.pruefer, spec.orientation);
    case ConstructionKind::kCliqueOfStars: return clique_of_stars(spec.k, spec.l, spec.orientation);
    case ConstructionKind::kRandom: return random_profile(spec.n, spec.edge_prob, spec.seed);
  }
  throw std::invalid_argument("unknown construction");
}

std::string_view to_string(ProfileFamily f) {
  switch (f) {
    case ProfileFamily::kAll: return "all";
    case ProfileFamily::kTrees: return "trees";
    case ProfileFamily::kGraphsWithOrientations: return "graphs_with_orientations";
  }
  return "unknown";
}

ProfileFamily parse_profile_family(std::string_view name) {
  for (auto f : {ProfileFamily::kAll, ProfileFamily::kTrees, ProfileFamily::kGraphsWithOrientations}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown profile family '" + std::string(name) + "'");
}

std::uint64_t enumerate_profiles(int n, ProfileFamily family,
                                 const std::function<bool(const StrategyProfile&)>& visit,
                                 const EnumerationLimits& limits) {
  require(n >= 1, "enumeration needs n >= 1");
  std::vector<Edge> slots;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const int pairs = static_cast<int>(slots.size());
  std::uint64_t count = 0;

  switch (family) {
    case ProfileFamily::kAll: {
      if (n > limits.all_max_n) {
        throw LimitExceeded("family 'all' limited to n <= " + std::to_string(limits.all_max_n));
      }
      std::vector<int> digit(static_cast<std::size_t>(pairs), 0);
      while (true) {
        StrategyProfile s(n);
        for (int i = 0; i < pairs; ++i) {
          if (digit[i] != 0) add_ordered(s, slots[i].first, slots[i].second, digit[i] == 1);
        }
        ++count;
        if (!visit(s)) return count;
        int i = pairs - 1;
        while (i >= 0 && digit[i] == 2) digit[i--] = 0;
        if (i < 0) return count;
        ++digit[i];
      }
    }
    case ProfileFamily::kTrees: {
      if (n > limits.trees_max_n) {
        throw LimitExceeded("family 'trees' limited to n <= " + std::to_string(limits.trees_max_n));
      }
      if (n == 1) {
        ++count;
        visit(StrategyProfile(1));
        return count;
      }
      std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
      while (true) {
        const auto edges = pruefer_edges(seq);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
          StrategyProfile s(n);
          for (std::size_t i = 0; i < edges.size(); ++i) {
            add_ordered(s, edges[i].first, edges[i].second, ((mask >> i) & 1U) == 0);
          }
          ++count;
          if (!visit(s)) return count;
        }
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) return count;
        ++seq[i];
      }
    }
    case ProfileFamily::kGraphsWithOrientations: {
      if (n > limits.oriented_graphs_max_n) {
        throw LimitExceeded("family 'graphs_with_orientations' limited to n <= " +
                            std::to_string(limits.oriented_graphs_max_n));
      }
      for (std::uint64_t gmask = 0; gmask < (std::uint64_t{1} << pairs); ++gmask) {
        Graph g(n);
        std::vector<Edge> edges;
        for (int i = 0; i < pairs; ++i) {
          if ((gmask >> i) & 1U) {
            g.add_edge(slots[i].first, slots[i].second);
            edges.push_back(slots[i]);
          }
        }
        if (!is_connected(g)) continue;
        for (std::uint64_t omask = 0; omask < (std::uint64_t{1} << edges.size()); ++omask) {
          StrategyProfile s(n);
          for (std::size_t i = 0; i < edges.size(); ++i) {
            add_ordered(s, edges[i].first, edges[i].second, ((omask >> i) & 1U) == 0);
          }
          ++count;
          if (!visit(s)) return count;
        }
      }
      return count;
    }
  }
  return count;
}

}  // namespace ncg
