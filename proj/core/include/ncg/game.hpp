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

#ifndef NCG_GAME_HPP_
#define NCG_GAME_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"

namespace ncg {

class InvalidProfile : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Player count and link price of a network creation game.
class Game {
 public:
  Game(int n, Rational alpha);

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }

 private:
  int n_;
  Rational alpha_;
};

/// Purchased-link sets s_u, one per player. Sets exclude the owner.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n);

  /// Throws InvalidProfile on self-purchases, duplicates or out-of-range ids.
  static StrategyProfile from_purchases(int n, const std::vector<Edge>& purchases);

  int size() const { return static_cast<int>(purchases_.size()); }
  NodeSet purchases(Node u) const { return purchases_[u]; }
  bool buys(Node u, Node v) const { return contains(purchases_[u], v); }

  void set_purchases(Node u, NodeSet targets);
  void add_purchase(Node u, Node v);
  void remove_purchase(Node u, Node v);

  int total_purchases() const;

  /// True if some pair buys the link in both directions.
  bool has_mutual_purchase() const;

  /// (buyer, target) pairs sorted lexicographically; the canonical form.
  std::vector<Edge> purchase_list() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile& a, const StrategyProfile& b) {
    return a.purchases_ <=> b.purchases_;
  }

 private:
  std::vector<NodeSet> purchases_;
};

/// FNV-1a over the canonical purchase list; stable across runs and builds.
std::uint64_t profile_hash(const StrategyProfile& s);
std::string profile_id(const StrategyProfile& s);
std::string profile_id_from_hash(std::uint64_t hash);

/// The communication graph G[s] together with who paid for each edge.
class OwnedGraph {
 public:
  explicit OwnedGraph(const StrategyProfile& profile);

  int size() const { return graph_.size(); }
  const Graph& graph() const { return graph_; }
  const StrategyProfile& profile() const { return profile_; }

  /// Endpoints of uv that bought it (one or both of u and v); empty when uv
  /// is not an edge.
  NodeSet owners(Node u, Node v) const;
  bool is_mutual(Node u, Node v) const { return profile_.buys(u, v) && profile_.buys(v, u); }
  std::vector<Edge> mutual_edges() const;

 private:
  StrategyProfile profile_;
  Graph graph_;
};

OwnedGraph build_graph(const StrategyProfile& profile);

Cost player_cost(const Game& game, const StrategyProfile& profile, Node u);

/// Cost of u read off an already built graph.
Cost player_cost(const Game& game, const OwnedGraph& g, Node u);

Cost social_cost(const Game& game, const StrategyProfile& profile);

enum class OptimumMode { kExact, kStarCliqueBound };

struct Optimum {
  Cost cost;
  bool upper_bound = false;
};

inline constexpr int kDefaultExhaustiveOptimumLimit = 7;

/// Minimum social cost over all strategy profiles.
///
/// kExact enumerates every labelled graph on n nodes (each edge bought once)
/// and throws LimitExceeded above `limit`; kStarCliqueBound returns
/// min(star, clique) flagged as an upper bound.
Optimum optimal_social_cost(const Game& game, OptimumMode mode,
                            int limit = kDefaultExhaustiveOptimumLimit);

/// Social cost lower bound min over m of alpha*m + 2n(n-1) - 2m, for edge
/// counts m from n-1 to n(n-1)/2: every ordered pair is at distance >= 1 and
/// non-adjacent pairs at distance >= 2.
Rational social_cost_lower_bound(const Game& game);

/// Optimum usable at any n: exhaustive up to `limit`, otherwise the
/// star/clique bound provided it meets social_cost_lower_bound (which makes
/// it exact). Throws LimitExceeded if neither applies.
Cost certified_optimum(const Game& game, int limit = kDefaultExhaustiveOptimumLimit);

/// C(s) / OPT, +infinity for a disconnected profile.
Cost price_ratio(const Game& game, const StrategyProfile& profile,
                 int limit = kDefaultExhaustiveOptimumLimit);

}  // namespace ncg

#endif  // NCG_GAME_HPP_
