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

#include "ncg/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ncg/profile_io.hpp"

namespace ncg {

std::string_view to_string(Schedule s) {
  return s == Schedule::kRoundRobin ? "round_robin" : "random_permutation";
}

Schedule parse_schedule(std::string_view name) {
  if (name == "round_robin") return Schedule::kRoundRobin;
  if (name == "random_permutation") return Schedule::kRandomPermutation;
  throw std::invalid_argument("unknown schedule '" + std::string(name) + "'");
}

std::string_view to_string(DynamicsOutcome o) {
  switch (o) {
    case DynamicsOutcome::kFixpoint: return "fixpoint";
    case DynamicsOutcome::kMaxRounds: return "max_rounds";
    case DynamicsOutcome::kCycle: return "cycle";
  }
  return "unknown";
}

DynamicsTrace best_response_dynamics(const Game& game, const StrategyProfile& initial,
                                     const DynamicsOptions& options) {
  const int n = initial.size();
  DynamicsTrace trace;
  trace.final_profile = initial;
  StrategyProfile& s = trace.final_profile;
  std::set<StrategyProfile> seen{s};
  std::mt19937_64 rng(options.seed);
  std::vector<Node> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  for (int round = 1; round <= options.max_rounds; ++round) {
    trace.rounds = round;
    if (options.schedule == Schedule::kRandomPermutation) std::shuffle(order.begin(), order.end(), rng);
    bool moved = false;
    for (Node u : order) {
      const Cost current = player_cost(game, s, u);
      const BestResponse br =
          options.responder ? options.responder(game, s, u) : best_response(game, s, u, options.limit);
      if (!(br.cost < current)) continue;
      trace.moves.push_back({round, u, s.purchases(u), br.strategy, current, br.cost});
      s.set_purchases(u, br.strategy);
      moved = true;
      if (!seen.insert(s).second) {
        trace.outcome = DynamicsOutcome::kCycle;
        trace.repeated_hash = profile_hash(s);
        return trace;
      }
    }
    if (!moved) {
      trace.outcome = DynamicsOutcome::kFixpoint;
      return trace;
    }
  }
  trace.outcome = DynamicsOutcome::kMaxRounds;
  return trace;
}

nlohmann::json to_json(const DynamicsTrace& trace, const Game& game) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : trace.moves) {
    moves.push_back({{"round", m.round},
                     {"player", m.player},
                     {"from", to_vector(m.from)},
                     {"to", to_vector(m.to)},
                     {"cost_before", cost_to_json(m.cost_before)},
                     {"cost_after", cost_to_json(m.cost_after)}});
  }
  nlohmann::json j = {{"outcome", to_string(trace.outcome)},
                      {"rounds", trace.rounds},
                      {"moves", moves},
                      {"final_profile", profile_to_json(game, trace.final_profile)},
                      {"final_profile_id", profile_id(trace.final_profile)}};
  if (trace.repeated_hash) j["repeated_hash"] = profile_id_from_hash(*trace.repeated_hash);
  return j;
}

}  // namespace ncg
