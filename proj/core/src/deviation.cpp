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

#include "ncg/deviation.hpp"

#include <array>
#include <functional>

#include "ncg/a_sets.hpp"
#include "ncg/profile_io.hpp"

namespace ncg {
namespace {

// The graph seen by one player: every edge except those only `u` paid for.
// D(u) under any strategy of u is a BFS whose first step is replaced.
class PlayerView {
 public:
  PlayerView(const StrategyProfile& profile, Node u) : n_(profile.size()), u_(u) {
    adj_.fill(0);
    for (Node a = 0; a < n_; ++a) {
      if (a == u) continue;
      for_each_node(profile.purchases(a), [&](Node b) {
        adj_[a] |= singleton(b);
        adj_[b] |= singleton(a);
      });
    }
  }

  std::int64_t distance_sum(NodeSet strategy) const {
    NodeSet visited = singleton(u_);
    NodeSet frontier = (adj_[u_] | strategy) & ~visited;
    std::int64_t total = 0;
    for (std::int64_t d = 1; frontier != 0; ++d) {
      total += d * popcount(frontier);
      visited |= frontier;
      NodeSet next = 0;
      for_each_node(frontier, [&](Node v) { next |= adj_[v]; });
      frontier = next & ~visited;
    }
    return visited == all_nodes(n_) ? total : -1;
  }

  Cost cost(const Rational& alpha, NodeSet strategy) const {
    const std::int64_t d = distance_sum(strategy);
    if (d < 0) return Cost::infinity();
    return Cost(alpha * popcount(strategy) + d);
  }

 private:
  int n_;
  Node u_;
  std::array<NodeSet, kMaxNodes> adj_{};
};

// Calls f(subset) for every k-subset of `pool` in lexicographic order.
void for_each_combination(const std::vector<Node>& pool, int k,
                          const std::function<void(NodeSet)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  const int m = static_cast<int>(pool.size());
  if (k > m) return;
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    NodeSet s = 0;
    for (int i : idx) s |= singleton(pool[i]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls f(subset) for every subset of `pool` (empty first, then by increasing
// integer value of the mask).
template <typename F>
void for_each_subset(NodeSet pool, F&& f) {
  NodeSet s = 0;
  while (true) {
    f(s);
    if (s == pool) return;
    s = (s - pool) & pool;
  }
}

void check_limit(int n, int limit, DeviationClass cls) {
  if (n > limit) {
    throw LimitExceeded(std::string(to_string(cls)) + " verification limited to n <= " +
                        std::to_string(limit) + " (got n=" + std::to_string(n) +
                        "); restricted classes add_one, drop_one, swap_one, drop_all_buy_one and "
                        "paper_multi have no size limit");
  }
}

}  // namespace

void validate(const StrategyProfile& profile, const Deviation& dev) {
  const int n = profile.size();
  if (dev.player < 0 || dev.player >= n) throw InvalidDeviation("player out of range");
  const NodeSet owned = profile.purchases(dev.player);
  if ((dev.sell & ~owned) != 0) {
    throw InvalidDeviation("player " + std::to_string(dev.player) + " sells a link it does not own");
  }
  if (contains(dev.buy, dev.player)) throw InvalidDeviation("player buys a link to itself");
  if ((dev.buy & ~all_nodes(n)) != 0) throw InvalidDeviation("purchase target out of range");
  if ((dev.buy & owned & ~dev.sell) != 0) {
    throw InvalidDeviation("player " + std::to_string(dev.player) + " buys a link it already owns");
  }
}

StrategyProfile apply(const StrategyProfile& profile, const Deviation& dev) {
  validate(profile, dev);
  StrategyProfile out = profile;
  out.set_purchases(dev.player, (profile.purchases(dev.player) & ~dev.sell) | dev.buy);
  return out;
}

DeviationDelta exact_delta(const Game& game, const StrategyProfile& profile, const Deviation& dev) {
  validate(profile, dev);
  const PlayerView view(profile, dev.player);
  const NodeSet before = profile.purchases(dev.player);
  const NodeSet after = (before & ~dev.sell) | dev.buy;
  return {dev, cost_change(view.cost(game.alpha(), before), view.cost(game.alpha(), after)),
          DeltaKind::kExact, "exact"};
}

BuyBounds buy_delta_bound(const Game& game, const StrategyProfile& profile, Node u, Node v) {
  if (u == v) throw InvalidDeviation("u and v must differ");
  const Deviation dev{u, 0, singleton(v)};
  const OwnedGraph g(profile);
  const DistanceTable dt(g.graph());
  BuyBounds out{{dev, Cost::infinity(), DeltaKind::kUpperBound, "buy:distance_sum"},
                {dev, Cost::infinity(), DeltaKind::kUpperBound, "buy:a_set"}};
  const Rational& alpha = game.alpha();
  if (dt.distance_sum(u) >= 0 && dt.distance_sum(v) >= 0) {
    out.distance_sum.delta = Cost(alpha + game.n() + dt.distance_sum(v) - dt.distance_sum(u));
  }
  if (dt(u, v) != kUnreachable) {
    const std::int64_t through = popcount(through_set(g.graph(), v, u));
    out.a_set.delta = Cost(alpha - Rational(dt(u, v) - 1) * through);
  }
  return out;
}

DeviationDelta sell_buy_delta(const Game& game, const StrategyProfile& profile, Node v,
                              NodeSet sold, Node u) {
  if (u == v) throw InvalidDeviation("u and v must differ");
  auto out = exact_delta(game, profile, Deviation{v, sold, singleton(u)});
  out.derivation = "sell_buy";
  return out;
}

BestResponse best_response(const Game& game, const StrategyProfile& profile, Node u, int limit) {
  const int n = profile.size();
  check_limit(n, limit, DeviationClass::kExact);
  const PlayerView view(profile, u);
  const std::vector<Node> pool = to_vector(all_nodes(n) & ~singleton(u));
  BestResponse best{0, Cost::infinity()};
  bool have = false;
  for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
    const Cost lower(game.alpha() * k + (n - 1));
    if (have && lower > best.cost) break;
    for_each_combination(pool, k, [&](NodeSet s) {
      const Cost c = view.cost(game.alpha(), s);
      if (!have || c < best.cost || (c == best.cost && lex_less(s, best.strategy))) {
        best = {s, c};
        have = true;
      }
    });
  }
  return best;
}

std::string_view to_string(DeviationClass c) {
  switch (c) {
    case DeviationClass::kExact: return "exact";
    case DeviationClass::kBuying: return "buying";
    case DeviationClass::kAddOne: return "add_one";
    case DeviationClass::kDropOne: return "drop_one";
    case DeviationClass::kSwapOne: return "swap_one";
    case DeviationClass::kDropAllBuyOne: return "drop_all_buy_one";
    case DeviationClass::kPaperMulti: return "paper_multi";
  }
  return "unknown";
}

DeviationClass parse_deviation_class(std::string_view name) {
  for (auto c : {DeviationClass::kExact, DeviationClass::kBuying, DeviationClass::kAddOne,
                 DeviationClass::kDropOne, DeviationClass::kSwapOne,
                 DeviationClass::kDropAllBuyOne, DeviationClass::kPaperMulti}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown deviation class '" + std::string(name) + "'");
}

EquilibriumReport verify_equilibrium(const Game& game, const StrategyProfile& profile,
                                     DeviationClass cls, const VerifyOptions& options) {
  const int n = profile.size();
  if (cls == DeviationClass::kExact || cls == DeviationClass::kBuying) {
    check_limit(n, options.limit, cls);
  }
  EquilibriumReport report{cls, true, is_necessary_only(cls), std::nullopt};
  const Rational& alpha = game.alpha();

  for (Node u = 0; u < n && report.equilibrium; ++u) {
    const NodeSet owned = profile.purchases(u);
    const NodeSet others = all_nodes(n) & ~singleton(u);
    const PlayerView view(profile, u);
    const Cost current = view.cost(alpha, owned);

    std::optional<Deviation> best;
    Cost best_delta(0);
    auto consider = [&](NodeSet sell, NodeSet buy) {
      const Cost c = view.cost(alpha, (owned & ~sell) | buy);
      const Cost delta = cost_change(current, c);
      if (delta < best_delta) {
        best_delta = delta;
        best = Deviation{u, sell, buy};
      }
    };

    switch (cls) {
      case DeviationClass::kExact: {
        const BestResponse br = best_response(game, profile, u, options.limit);
        if (br.cost < current) {
          best = Deviation{u, owned & ~br.strategy, br.strategy & ~owned};
          best_delta = cost_change(current, br.cost);
        }
        break;
      }
      case DeviationClass::kBuying: {
        const std::vector<Node> pool = to_vector(others & ~owned);
        for (int k = 1; k <= static_cast<int>(pool.size()); ++k) {
          const Cost lower(alpha * (popcount(owned) + k) + (n - 1));
          if (lower >= current) break;
          for_each_combination(pool, k, [&](NodeSet buy) { consider(0, buy); });
        }
        break;
      }
      case DeviationClass::kAddOne:
        for_each_node(others & ~owned, [&](Node v) { consider(0, singleton(v)); });
        break;
      case DeviationClass::kDropOne:
        for_each_node(owned, [&](Node v) { consider(singleton(v), 0); });
        break;
      case DeviationClass::kSwapOne:
        for_each_node(owned, [&](Node v) {
          for_each_node(others & ~owned, [&](Node w) { consider(singleton(v), singleton(w)); });
        });
        break;
      case DeviationClass::kDropAllBuyOne:
        if (owned != 0) {
          for_each_node(others, [&](Node w) { consider(owned, singleton(w)); });
        }
        break;
      case DeviationClass::kPaperMulti: {
        if (popcount(owned) > 20) {
          throw LimitExceeded("paper_multi enumerates subsets of owned links; player " +
                              std::to_string(u) + " owns more than 20");
        }
        for_each_subset(owned, [&](NodeSet sell) {
          const std::vector<Node> pool = to_vector(others & ~(owned & ~sell));
          for (int k = 1; k <= options.multi_max_buys; ++k) {
            for_each_combination(pool, k, [&](NodeSet buy) { consider(sell, buy); });
          }
        });
        break;
      }
    }

    if (best) {
      report.equilibrium = false;
      report.witness = DeviationDelta{*best, best_delta, DeltaKind::kExact, std::string(to_string(cls))};
    }
  }
  return report;
}

nlohmann::json to_json(const DeviationDelta& d) {
  std::vector<Edge> sell;
  for_each_node(d.deviation.sell, [&](Node v) { sell.emplace_back(d.deviation.player, v); });
  return {{"player", d.deviation.player},
          {"sell", edges_to_json(sell)},
          {"buy", to_vector(d.deviation.buy)},
          {"delta", cost_to_json(d.delta)},
          {"kind", d.kind == DeltaKind::kExact ? "exact" : "upper_bound"},
          {"derivation", d.derivation}};
}

nlohmann::json to_json(const EquilibriumReport& report) {
  nlohmann::json j = {{"class", to_string(report.deviation_class)},
                      {"verdict", report.equilibrium ? "equilibrium" : "violated"},
                      {"necessary_only", report.necessary_only}};
  if (report.witness) j["witness"] = to_json(*report.witness);
  return j;
}

}  // namespace ncg
