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

#include "ncg/game.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

namespace ncg {

Game::Game(int n, Rational alpha) : n_(n), alpha_(alpha) {
  if (n < 1 || n > kMaxNodes) {
    throw std::invalid_argument("player count must be in [1, 64], got " + std::to_string(n));
  }
  if (alpha < Rational(0)) throw std::invalid_argument("link price must be non-negative");
}

StrategyProfile::StrategyProfile(int n) : purchases_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxNodes) {
    throw InvalidProfile("player count must be in [0, 64], got " + std::to_string(n));
  }
}

StrategyProfile StrategyProfile::from_purchases(int n, const std::vector<Edge>& purchases) {
  StrategyProfile s(n);
  for (const auto& [u, v] : purchases) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidProfile("purchase " + std::to_string(u) + " -> " + std::to_string(v) +
                           " out of range for n=" + std::to_string(n));
    }
    if (s.buys(u, v)) {
      throw InvalidProfile("duplicate purchase " + std::to_string(u) + " -> " + std::to_string(v));
    }
    s.add_purchase(u, v);
  }
  return s;
}

void StrategyProfile::set_purchases(Node u, NodeSet targets) {
  if (contains(targets, u)) throw InvalidProfile("player " + std::to_string(u) + " buys itself");
  if ((targets & ~all_nodes(size())) != 0) throw InvalidProfile("purchase target out of range");
  purchases_[u] = targets;
}

void StrategyProfile::add_purchase(Node u, Node v) {
  if (u == v) throw InvalidProfile("player " + std::to_string(u) + " buys itself");
  purchases_[u] |= singleton(v);
}

void StrategyProfile::remove_purchase(Node u, Node v) { purchases_[u] &= ~singleton(v); }

int StrategyProfile::total_purchases() const {
  int total = 0;
  for (NodeSet s : purchases_) total += popcount(s);
  return total;
}

bool StrategyProfile::has_mutual_purchase() const {
  for (Node u = 0; u < size(); ++u) {
    bool mutual = false;
    for_each_node(purchases_[u], [&](Node v) { mutual = mutual || buys(v, u); });
    if (mutual) return true;
  }
  return false;
}

std::vector<Edge> StrategyProfile::purchase_list() const {
  std::vector<Edge> out;
  for (Node u = 0; u < size(); ++u) {
    for_each_node(purchases_[u], [&](Node v) { out.emplace_back(u, v); });
  }
  return out;
}

std::uint64_t profile_hash(const StrategyProfile& s) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(s.size()));
  for (const auto& [u, v] : s.purchase_list()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

std::string profile_id_from_hash(std::uint64_t hash) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << hash;
  return os.str();
}

std::string profile_id(const StrategyProfile& s) { return profile_id_from_hash(profile_hash(s)); }

OwnedGraph::OwnedGraph(const StrategyProfile& profile) : profile_(profile), graph_(profile.size()) {
  for (const auto& [u, v] : profile.purchase_list()) graph_.add_edge(u, v);
}

NodeSet OwnedGraph::owners(Node u, Node v) const {
  NodeSet out = 0;
  if (profile_.buys(u, v)) out |= singleton(u);
  if (profile_.buys(v, u)) out |= singleton(v);
  return out;
}

std::vector<Edge> OwnedGraph::mutual_edges() const {
  std::vector<Edge> out;
  for (const auto& [u, v] : graph_.edges()) {
    if (is_mutual(u, v)) out.emplace_back(u, v);
  }
  return out;
}

OwnedGraph build_graph(const StrategyProfile& profile) { return OwnedGraph(profile); }

Cost player_cost(const Game& game, const OwnedGraph& g, Node u) {
  const std::int64_t dist = distance_sum(g.graph(), u);
  if (dist < 0) return Cost::infinity();
  return Cost(game.alpha() * popcount(g.profile().purchases(u)) + dist);
}

Cost player_cost(const Game& game, const StrategyProfile& profile, Node u) {
  return player_cost(game, OwnedGraph(profile), u);
}

Cost social_cost(const Game& game, const StrategyProfile& profile) {
  const OwnedGraph g(profile);
  Cost total(0);
  for (Node u = 0; u < profile.size(); ++u) {
    total += player_cost(game, g, u);
    if (total.is_infinite()) break;
  }
  return total;
}

namespace {

// min_W[m] = least total distance sum over connected graphs with m edges, or
// -1 if no connected graph has m edges.
std::vector<std::int64_t> exhaustive_distance_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Edge> slots;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const int pairs = static_cast<int>(slots.size());
  std::vector<std::int64_t> best(static_cast<std::size_t>(pairs) + 1, -1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    for (int i = 0; i < pairs; ++i) {
      if ((mask >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    std::int64_t total = 0;
    for (Node u = 0; u < n && total >= 0; ++u) {
      const std::int64_t d = distance_sum(g, u);
      total = d < 0 ? -1 : total + d;
    }
    if (total < 0) continue;
    auto& slot = best[static_cast<std::size_t>(std::popcount(mask))];
    if (slot < 0 || total < slot) slot = total;
  }
  std::lock_guard lock(mu);
  cache.emplace(n, best);
  return best;
}

Rational star_cost(const Game& game) {
  const std::int64_t k = game.n() - 1;
  return game.alpha() * k + 2 * k * k;
}

Rational clique_cost(const Game& game) {
  const std::int64_t n = game.n();
  return game.alpha() * (n * (n - 1) / 2) + n * (n - 1);
}

}  // namespace

Optimum optimal_social_cost(const Game& game, OptimumMode mode, int limit) {
  if (mode == OptimumMode::kStarCliqueBound) {
    return {Cost(std::min(star_cost(game), clique_cost(game))), true};
  }
  if (game.n() > limit) {
    throw LimitExceeded("exact optimum limited to n <= " + std::to_string(limit) + " (got n=" +
                        std::to_string(game.n()) + "); use the star_clique_bound mode");
  }
  const auto table = exhaustive_distance_table(game.n());
  std::optional<Rational> best;
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (table[m] < 0) continue;
    const Rational c = game.alpha() * static_cast<std::int64_t>(m) + table[m];
    if (!best || c < *best) best = c;
  }
  return {Cost(*best), false};
}

Rational social_cost_lower_bound(const Game& game) {
  const std::int64_t n = game.n();
  if (n == 1) return Rational(0);
  std::optional<Rational> best;
  for (std::int64_t m = n - 1; m <= n * (n - 1) / 2; ++m) {
    const Rational c = game.alpha() * m + 2 * n * (n - 1) - 2 * m;
    if (!best || c < *best) best = c;
  }
  return *best;
}

Cost certified_optimum(const Game& game, int limit) {
  if (game.n() <= limit) return optimal_social_cost(game, OptimumMode::kExact, limit).cost;
  const Rational upper = optimal_social_cost(game, OptimumMode::kStarCliqueBound).cost.value();
  if (upper == social_cost_lower_bound(game)) return Cost(upper);
  throw LimitExceeded("optimum not certified for n=" + std::to_string(game.n()));
}

Cost price_ratio(const Game& game, const StrategyProfile& profile, int limit) {
  const Cost c = social_cost(game, profile);
  if (c.is_infinite()) return c;
  return divide(c, certified_optimum(game, limit).value());
}

}  // namespace ncg
