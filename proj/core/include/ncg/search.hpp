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

#ifndef NCG_SEARCH_HPP_
#define NCG_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/constructions.hpp"
#include "ncg/deviation.hpp"
#include "ncg/dynamics.hpp"
#include "ncg/theorem_checks.hpp"

namespace ncg {

std::string_view version();

struct ExperimentConfig {
  std::vector<int> n_values;
  std::vector<Rational> alphas;
  ProfileFamily family = ProfileFamily::kAll;
  DeviationClass verifier = DeviationClass::kExact;
  EnumerationLimits limits;
  int limit = kDefaultBestResponseLimit;

  // Dynamics-based search.
  std::vector<std::uint64_t> seeds;
  double start_edge_prob = 0.5;
  Schedule schedule = Schedule::kRandomPermutation;
  int max_rounds = 100;

  std::vector<Rational> epsilons{Rational(1, 2), Rational(1, 4)};
  int workers = 1;
  std::string output;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);

  /// Hash of every field that influences results; excludes workers and output.
  std::string hash() const;
};

struct ResultRecord {
  std::string config_hash;
  Game game{1, Rational(0)};
  StrategyProfile profile;
  EquilibriumReport equilibrium;
  AnalysisReport analysis;
  std::string source;
  double seconds = 0.0;  // never compared across runs
};

nlohmann::json to_json(const ResultRecord& record);

/// Rebuilds a record from its JSON line; the analysis is recomputed from the
/// stored profile and class.
ResultRecord record_from_json(const nlohmann::json& j);

/// Certification implied by passing a given verifier class.
Certification certification_for(DeviationClass cls);

struct FilterStats {
  std::uint64_t visited = 0;
  std::uint64_t rejected_drop_one = 0;
  std::uint64_t rejected_add_one = 0;
  std::uint64_t rejected_swap_one = 0;
  std::uint64_t rejected_final = 0;
  std::uint64_t certified = 0;
};

/// Runs the prefilters and the final verifier. Returns the first failing
/// report, or the report of `cls` when the profile is certified.
EquilibriumReport filtered_verify(const Game& game, const StrategyProfile& profile, DeviationClass cls,
                                  int limit, FilterStats* stats = nullptr);

/// Every profile of the configured family that `verifier` certifies, for each
/// (n, alpha). Sorted by (n, alpha, profile); independent of `workers`.
std::vector<ResultRecord> enumerate_equilibria(const ExperimentConfig& config, FilterStats* stats = nullptr);

/// Best-response dynamics from random_profile(n, start_edge_prob, seed) for
/// each seed and from each extra start of matching size. Fixpoints that pass
/// `verifier` are deduplicated (the smallest seed is kept as source) and
/// analyzed. Sorted like enumerate_equilibria.
std::vector<ResultRecord> hunt_equilibria(const ExperimentConfig& config,
                                          const std::vector<StrategyProfile>& extra_starts = {});

struct SweepRow {
  int n = 0;
  Rational alpha;
  std::string profile_id;
  int diam = 0;
  int diam_h = 0;
  int n_nontrivial = 0;
  int max_degh_plus = 0;
  std::optional<Cost> ratio;
  bool prop1_ok = false;
  bool unif50_ok = false;
  bool unif25_ok = false;
  std::optional<bool> diam_bound_ok;
  std::optional<bool> tree_poa_ok;  // trees only
  Cost bound_2n_over_alpha_plus_6;
  std::optional<bool> biconn_ok;    // alpha < (n-1)/2 only
  std::optional<bool> degree_ok;    // d_H <= 2 only
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  int prop1_pass = 0;
  int unif50_pass = 0;
  int unif25_pass = 0;
  int diam_bound_pass = 0;
  int diam_bound_total = 0;
  int tree_poa_pass = 0;
  int tree_poa_total = 0;
  std::vector<std::string> failures;  // hard failures with witnesses

  bool hard_failure() const { return !failures.empty(); }
};

SweepSummary theorem_sweep(const std::vector<ResultRecord>& records);

/// Header plus one line per row; the first thirteen columns are n, alpha,
/// profile_id, diam, diam_H, n_nontrivial_biconn, max_degH_plus, ratio,
/// prop1_ok, unif50_ok, unif25_ok, diam_bound_ok, tree_poa_ok.
std::string to_csv(const SweepSummary& summary);
nlohmann::json to_json(const SweepSummary& summary);

/// Appends records as JSON lines and rewrites `<path>.manifest.json`.
void write_records(const std::string& path, const ExperimentConfig& config,
                   const std::vector<ResultRecord>& records);
std::vector<ResultRecord> read_records(const std::string& path);

}  // namespace ncg

#endif  // NCG_SEARCH_HPP_
