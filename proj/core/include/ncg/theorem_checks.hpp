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

#ifndef NCG_THEOREM_CHECKS_HPP_
#define NCG_THEOREM_CHECKS_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/biconnectivity.hpp"
#include "ncg/distance_uniformity.hpp"
#include "ncg/game.hpp"

namespace ncg {

/// What is known about the profile being analyzed. Hard checks only fire
/// when the hypotheses of the corresponding statement are certified.
enum class Certification { kNone, kBuyingEquilibrium, kEquilibrium };

std::string_view to_string(Certification c);

struct DegreeReport {
  int max_degh_plus = 0;
  Node argmax = -1;
  int diam = 0;                // kUnreachable when disconnected
  int diam_h = 0;              // largest diameter over nontrivial components
  int n_nontrivial = 0;
  Cost n_over_alpha;           // +inf at alpha = 0
  Cost bound_2n_over_alpha_plus_6;
  Cost bound_3n_over_alpha;
  bool asserted = false;       // the d_H <= 2 bound applied to some component
  bool ok = true;
  std::optional<Node> witness;
};

/// Observational table of out-degrees inside nontrivial components. When
/// `certified_equilibrium` holds, every nontrivial component of diameter at
/// most 2 must satisfy max deg_H^+ <= 3n/alpha; that is the only assertion.
DegreeReport degree_bound_report(const Game& game, const OwnedGraph& g, bool certified_equilibrium);

struct StructureReport {
  int n_nontrivial = 0;
  bool is_tree = false;
  int diam = 0;
  int diam_h = 0;
  bool unique_component_applies = false;  // alpha < (n-1)/2
  bool unique_component_ok = true;
  bool tree_applies = false;              // alpha > 4n-13 and n >= 4
  bool tree_ok = true;
  bool diam_bound_ok = true;              // diam < diam_H + 994, reported only
  bool within_1988 = true;
  bool within_1998 = true;
  bool ok = true;                         // hard checks only
};

StructureReport biconnected_structure_checks(const Game& game, const OwnedGraph& g,
                                             bool certified_equilibrium);

struct CheckResult {
  std::string name;
  bool ok = true;
  bool hard = false;
  std::string witness;
};

struct AnalysisOptions {
  std::vector<Rational> epsilons{Rational(1, 2), Rational(1, 4)};
  Certification certification = Certification::kNone;
  int optimum_limit = kDefaultExhaustiveOptimumLimit;
};

struct CorollaryPower {
  Rational epsilon;
  int power = 0;
  bool almost_uniform = false;
  int r = -1;
};

struct AnalysisReport {
  std::string graph_id;
  int n = 0;
  Rational alpha;
  Certification certification = Certification::kNone;
  int diam = 0;
  int radius = 0;
  std::vector<std::vector<int>> layer_sizes;  // per node
  std::vector<UniformityCertificate> uniformity;
  std::vector<CorollaryPower> corollary;
  std::optional<WindowInequalityResult> prop1;
  int n_nontrivial = 0;
  int n_bridges = 0;
  NodeSet cut_vertices = 0;
  DegreeReport degrees;
  StructureReport structure;
  std::optional<Cost> ratio;
  std::vector<CheckResult> checks;

  bool connected() const { return diam != kUnreachable; }
  bool hard_failure() const;
  std::vector<CheckResult> failed_hard_checks() const;
};

AnalysisReport analyze(const Game& game, const StrategyProfile& profile, const AnalysisOptions& options = {});

nlohmann::json to_json(const AnalysisReport& report);

}  // namespace ncg

#endif  // NCG_THEOREM_CHECKS_HPP_
