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

#ifndef NCG_CONSTRUCTIONS_HPP_
#define NCG_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/game.hpp"

namespace ncg {

enum class ConstructionKind { kStar, kClique, kPath, kCycle, kTreeFromPruefer, kCliqueOfStars, kRandom };

std::string_view to_string(ConstructionKind k);
ConstructionKind parse_construction_kind(std::string_view name);

/// Who pays for each edge of a construction.
///   kLeavesBuy / kCenterBuys         stars
///   kLowerBuys / kHigherBuys         cliques, paths, cycles (cycles: kForward
///                                    has i buy i+1 mod n)
///   kChildBuys / kParentBuys         trees, rooted at node 0
///   kSingleBuyer / kLowerIndex       clique of stars: one center buys every
///                                    clique link, or each clique link is
///                                    bought by its lower-indexed center
enum class Orientation {
  kDefault,
  kLeavesBuy,
  kCenterBuys,
  kLowerBuys,
  kHigherBuys,
  kForward,
  kChildBuys,
  kParentBuys,
  kSingleBuyer,
  kLowerIndex,
};

std::string_view to_string(Orientation o);
Orientation parse_orientation(std::string_view name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::kStar;
  int n = 0;                         // star, clique, path, cycle, random
  int k = 0;                         // clique of stars: number of centers
  int l = 0;                         // clique of stars: nodes per star
  std::vector<int> pruefer;          // tree_from_pruefer
  double edge_prob = 0.5;            // random
  Orientation orientation = Orientation::kDefault;
  std::uint64_t seed = 0;
  /// Link price carried along for file output; not used by make().
  std::optional<Rational> alpha;

  /// Parses comma-separated key=value pairs: n, k, l, p, orientation, alpha
  /// and seq. Bare values after seq extend the sequence, so "seq=0,0" and
  /// "seq=3,1,orientation=parent_buys" both work.
  static ConstructionSpec parse(ConstructionKind kind, std::string_view params, std::uint64_t seed);
};

/// Throws std::invalid_argument on invalid parameters.
StrategyProfile make(const ConstructionSpec& spec);

StrategyProfile star(int n, Orientation o = Orientation::kLeavesBuy);
StrategyProfile clique(int n, Orientation o = Orientation::kLowerBuys);
StrategyProfile path(int n, Orientation o = Orientation::kLowerBuys);
StrategyProfile cycle(int n, Orientation o = Orientation::kForward);

/// Labelled tree decoded from a Pruefer sequence of length n-2, rooted at
/// node 0.
StrategyProfile tree_from_pruefer(const std::vector<int>& sequence, Orientation o = Orientation::kChildBuys);

/// k centers 0, l, 2l, ... forming a clique; center c*l owns the leaves
/// c*l+1 .. c*l+l-1. Requires k >= 2 and l >= 1. Under kSingleBuyer the last
/// center (k-1)*l buys all of its clique links and the rest go to the
/// lower-indexed center.
StrategyProfile clique_of_stars(int k, int l, Orientation o = Orientation::kSingleBuyer);

/// Each pair present with probability edge_prob, owner chosen uniformly.
StrategyProfile random_profile(int n, double edge_prob, std::uint64_t seed);

inline constexpr int kDefaultRejectionLimit = 100000;

/// Rejection-samples random_profile until some nontrivial biconnected
/// component holds at least half the nodes. Throws LimitExceeded after
/// `max_attempts` draws.
StrategyProfile random_biconnected(int n, std::uint64_t seed, double edge_prob = 0.4,
                                   int max_attempts = kDefaultRejectionLimit);

enum class ProfileFamily { kAll, kTrees, kGraphsWithOrientations };

std::string_view to_string(ProfileFamily f);
ProfileFamily parse_profile_family(std::string_view name);

struct EnumerationLimits {
  int all_max_n = 5;
  int trees_max_n = 8;
  int oriented_graphs_max_n = 6;
};

/// Exhaustive, duplicate-free stream of labelled profiles in a fixed order.
///   kAll                      every pair absent or bought by either endpoint,
///                             3^(n choose 2) profiles
///   kTrees                    Pruefer trees times 2^(n-1) edge orientations
///   kGraphsWithOrientations   connected graphs times 2^m orientations
/// The visitor returns false to stop early. Returns the number visited.
std::uint64_t enumerate_profiles(int n, ProfileFamily family,
                                 const std::function<bool(const StrategyProfile&)>& visit,
                                 const EnumerationLimits& limits = {});

}  // namespace ncg

#endif  // NCG_CONSTRUCTIONS_HPP_
