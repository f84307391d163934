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

#ifndef NCG_DYNAMICS_HPP_
#define NCG_DYNAMICS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/deviation.hpp"

namespace ncg {

enum class Schedule { kRoundRobin, kRandomPermutation };

std::string_view to_string(Schedule s);
Schedule parse_schedule(std::string_view name);

struct DynamicsMove {
  int round = 0;
  Node player = 0;
  NodeSet from = 0;
  NodeSet to = 0;
  Cost cost_before;
  Cost cost_after;
};

enum class DynamicsOutcome { kFixpoint, kMaxRounds, kCycle };

std::string_view to_string(DynamicsOutcome o);

struct DynamicsTrace {
  std::vector<DynamicsMove> moves;
  DynamicsOutcome outcome = DynamicsOutcome::kMaxRounds;
  int rounds = 0;
  StrategyProfile final_profile;
  /// Hash of the profile that was seen twice, for kCycle.
  std::optional<std::uint64_t> repeated_hash;
};

struct DynamicsOptions {
  Schedule schedule = Schedule::kRoundRobin;
  int max_rounds = 100;
  std::uint64_t seed = 0;
  int limit = kDefaultBestResponseLimit;
  /// Replaces best_response when set, e.g. to restrict the move set. A move
  /// is taken whenever the returned cost is below the current cost.
  std::function<BestResponse(const Game&, const StrategyProfile&, Node)> responder;
};

/// Best-response dynamics. Each round visits every player once (in index
/// order or a seeded shuffle) and replaces its strategy by best_response
/// when that is a strict improvement. Stops at a round without moves (an
/// exact equilibrium), after max_rounds, or when a profile repeats.
DynamicsTrace best_response_dynamics(const Game& game, const StrategyProfile& initial,
                                     const DynamicsOptions& options = {});

nlohmann::json to_json(const DynamicsTrace& trace, const Game& game);

}  // namespace ncg

#endif  // NCG_DYNAMICS_HPP_
