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

#ifndef NCG_DEVIATION_HPP_
#define NCG_DEVIATION_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ncg/game.hpp"

namespace ncg {

class InvalidDeviation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A unilateral change of `player`'s strategy: drop the links to `sell`
/// (which it must have bought) and buy links to `buy`. The new strategy is
/// (s_player \ sell) | buy, so re-buying a sold target is allowed.
struct Deviation {
  Node player = 0;
  NodeSet sell = 0;
  NodeSet buy = 0;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

/// Throws InvalidDeviation unless `dev` is well formed for `profile`.
void validate(const StrategyProfile& profile, const Deviation& dev);
StrategyProfile apply(const StrategyProfile& profile, const Deviation& dev);

enum class DeltaKind { kExact, kUpperBound };

/// Cost change of a deviation for the deviating player, either recomputed
/// exactly or bounded from above by a closed form named in `derivation`.
struct DeviationDelta {
  Deviation deviation;
  Cost delta;
  DeltaKind kind = DeltaKind::kExact;
  std::string derivation;
};

/// c_u(s') - c_u(s), recomputed from the deviated graph.
DeviationDelta exact_delta(const Game& game, const StrategyProfile& profile, const Deviation& dev);

/// Two closed-form upper bounds on u buying a link to v:
///   distance_sum:  alpha + n + D(v) - D(u)
///   a_set:         alpha - (d(u, v) - 1) |A^u(v)|
/// where A^u(v) holds the nodes (v included) whose every shortest path to u
/// runs through v.
struct BuyBounds {
  DeviationDelta distance_sum;
  DeviationDelta a_set;
};
BuyBounds buy_delta_bound(const Game& game, const StrategyProfile& profile, Node u, Node v);

/// Exact delta of v selling the links to `sold` and buying a link to u.
DeviationDelta sell_buy_delta(const Game& game, const StrategyProfile& profile, Node v,
                              NodeSet sold, Node u);

inline constexpr int kDefaultBestResponseLimit = 14;

struct BestResponse {
  NodeSet strategy = 0;
  Cost cost;
};

/// Exact best response of u by branch and bound over all subsets of
/// V \ {u}. A subset of size k is skipped once alpha*k + (n-1) exceeds the
/// incumbent. Ties go to the lexicographically smallest subset.
BestResponse best_response(const Game& game, const StrategyProfile& profile, Node u,
                           int limit = kDefaultBestResponseLimit);

enum class DeviationClass {
  kExact,
  kBuying,
  kAddOne,
  kDropOne,
  kSwapOne,
  kDropAllBuyOne,
  kPaperMulti,
};

std::string_view to_string(DeviationClass c);
DeviationClass parse_deviation_class(std::string_view name);

/// Restricted classes only give necessary conditions for equilibrium.
inline bool is_necessary_only(DeviationClass c) {
  return c != DeviationClass::kExact && c != DeviationClass::kBuying;
}

struct VerifyOptions {
  int limit = kDefaultBestResponseLimit;
  /// Largest number of simultaneous purchases tried by kPaperMulti.
  int multi_max_buys = 3;
};

struct EquilibriumReport {
  DeviationClass deviation_class = DeviationClass::kExact;
  bool equilibrium = true;
  bool necessary_only = false;
  std::optional<DeviationDelta> witness;
};

/// Checks that no player has a strictly improving deviation in `cls`.
///
/// kExact runs best_response for each player; kBuying tries every non-empty
/// set of additional links. The restricted classes try: one purchase
/// (kAddOne), one sale (kDropOne), one sale plus one purchase (kSwapOne),
/// selling everything and buying one link (kDropAllBuyOne), and any set of
/// sales together with 1..multi_max_buys purchases (kPaperMulti). The witness
/// is the most improving deviation of the first violating player.
EquilibriumReport verify_equilibrium(const Game& game, const StrategyProfile& profile,
                                     DeviationClass cls, const VerifyOptions& options = {});

nlohmann::json to_json(const EquilibriumReport& report);
nlohmann::json to_json(const DeviationDelta& delta);

}  // namespace ncg

#endif  // NCG_DEVIATION_HPP_
