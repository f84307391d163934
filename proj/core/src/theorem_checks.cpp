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

#include "ncg/theorem_checks.hpp"

#include <algorithm>
#include <sstream>

#include "ncg/profile_io.hpp"

namespace ncg {
namespace {

Cost scaled_inverse(const Game& game, std::int64_t numerator) {
  if (game.alpha() == Rational(0)) return Cost::infinity();
  return Cost(Rational(numerator) / game.alpha());
}

int largest_component_diameter(const DistanceTable& dt, const BiconnectivityDecomposition& dec) {
  int best = 0;
  for (int c : dec.nontrivial) best = std::max(best, component_diameter(dt, dec.components[c]));
  return best;
}

bool is_tree(const Graph& g, const DistanceTable& dt) {
  return dt.connected() && g.edge_count() == g.size() - 1;
}

std::string node_list(NodeSet s) {
  std::ostringstream out;
  bool first = true;
  for (Node v : to_vector(s)) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::kNone: return "none";
    case Certification::kBuyingEquilibrium: return "buying";
    case Certification::kEquilibrium: return "exact";
  }
  return "unknown";
}

DegreeReport degree_bound_report(const Game& game, const OwnedGraph& g, bool certified_equilibrium) {
  const DistanceTable dt(g.graph());
  const auto dec = biconnectivity(g.graph());
  DegreeReport r;
  r.diam = dt.diameter();
  r.diam_h = largest_component_diameter(dt, dec);
  r.n_nontrivial = static_cast<int>(dec.nontrivial.size());
  r.n_over_alpha = scaled_inverse(game, game.n());
  r.bound_3n_over_alpha = scaled_inverse(game, 3LL * game.n());
  r.bound_2n_over_alpha_plus_6 = scaled_inverse(game, 2LL * game.n()) + Cost(6);
  for (Node v = 0; v < g.size(); ++v) {
    const int d = nonbridge_outdegree(g, dec, v);
    if (d > r.max_degh_plus) {
      r.max_degh_plus = d;
      r.argmax = v;
    }
  }
  if (!certified_equilibrium) return r;
  for (int c : dec.nontrivial) {
    if (component_diameter(dt, dec.components[c]) > 2) continue;
    r.asserted = true;
    for (Node v : to_vector(dec.components[c].nodes)) {
      if (Cost(component_outdegree(g, dec, c, v)) > r.bound_3n_over_alpha) {
        r.ok = false;
        if (!r.witness) r.witness = v;
      }
    }
  }
  return r;
}

StructureReport biconnected_structure_checks(const Game& game, const OwnedGraph& g,
                                             bool certified_equilibrium) {
  const DistanceTable dt(g.graph());
  const auto dec = biconnectivity(g.graph());
  const int n = game.n();
  StructureReport r;
  r.n_nontrivial = static_cast<int>(dec.nontrivial.size());
  r.is_tree = is_tree(g.graph(), dt);
  r.diam = dt.diameter();
  r.diam_h = largest_component_diameter(dt, dec);
  r.unique_component_applies = game.alpha() * 2 < Rational(n - 1);
  // At n = 3 the bound is negative, yet the triangle is an equilibrium for
  // alpha <= 1, so the statement is only applied from n = 4 on.
  r.tree_applies = n >= 4 && game.alpha() > Rational(4 * n - 13);
  if (dt.connected()) {
    r.diam_bound_ok = r.diam < r.diam_h + 994;
    r.within_1988 = r.diam <= 1988;
    r.within_1998 = r.diam <= 1998;
  }
  if (certified_equilibrium) {
    if (r.unique_component_applies) r.unique_component_ok = r.n_nontrivial <= 1;
    if (r.tree_applies) r.tree_ok = r.is_tree;
  }
  r.ok = r.unique_component_ok && r.tree_ok;
  return r;
}

bool AnalysisReport::hard_failure() const { return !failed_hard_checks().empty(); }

std::vector<CheckResult> AnalysisReport::failed_hard_checks() const {
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    if (c.hard && !c.ok) out.push_back(c);
  }
  return out;
}

AnalysisReport analyze(const Game& game, const StrategyProfile& profile, const AnalysisOptions& options) {
  if (profile.size() != game.n()) throw InvalidProfile("profile size does not match n");
  const OwnedGraph g(profile);
  const DistanceTable dt(g.graph());
  const auto dec = biconnectivity(g.graph());
  const bool exact = options.certification == Certification::kEquilibrium;
  const bool buying = exact || options.certification == Certification::kBuyingEquilibrium;

  AnalysisReport rep;
  rep.graph_id = profile_id(profile);
  rep.n = game.n();
  rep.alpha = game.alpha();
  rep.certification = options.certification;
  rep.diam = dt.diameter();
  rep.n_nontrivial = static_cast<int>(dec.nontrivial.size());
  rep.n_bridges = static_cast<int>(dec.bridges.size());
  rep.cut_vertices = dec.cut_vertices;
  rep.degrees = degree_bound_report(game, g, exact);
  rep.structure = biconnected_structure_checks(game, g, exact);

  rep.radius = kUnreachable;
  for (Node u = 0; u < game.n(); ++u) {
    rep.layer_sizes.push_back(layers(g.graph(), u).sizes());
    rep.radius = std::min(rep.radius, dt.eccentricity(u));
  }

  const auto mutual = g.mutual_edges();
  rep.checks.push_back({"mutual_free", mutual.empty(), exact,
                        mutual.empty() ? "" : std::to_string(mutual[0].first) + "-" + std::to_string(mutual[0].second)});

  if (rep.connected()) {
    for (const auto& eps : options.epsilons) {
      auto cert = uniformity_certificate(g.graph(), game.alpha(), eps);
      std::string witness;
      if (!cert.ok) {
        const auto it = std::min_element(cert.per_node_counts.begin(), cert.per_node_counts.end());
        if (it != cert.per_node_counts.end()) {
          witness = "node " + std::to_string(it - cert.per_node_counts.begin()) + " has " + std::to_string(*it) +
                    " nodes within " + std::to_string(cert.x) + " of r=" + std::to_string(cert.r);
        }
      }
      rep.checks.push_back({"uniformity_eps_" + to_string(eps), cert.ok, buying, witness});

      CorollaryPower cp{eps, 2 * cert.x, false, -1};
      const auto res = is_distance_uniform(graph_power(g.graph(), cp.power), eps, UniformityMode::kAlmostUniform);
      cp.almost_uniform = res.ok;
      cp.r = res.r;
      rep.corollary.push_back(cp);
      rep.checks.push_back({"power_almost_uniform_eps_" + to_string(eps), res.ok, false, ""});

      rep.uniformity.push_back(std::move(cert));
    }
    rep.prop1 = check_window_inequality(g.graph(), game.alpha());
    rep.checks.push_back({"prop1_window", rep.prop1->ok, buying,
                          rep.prop1->ok ? "" : "r=" + std::to_string(rep.prop1->r) + " nodes " +
                                                   node_list(rep.prop1->violating)});
  }

  try {
    rep.ratio = price_ratio(game, profile, options.optimum_limit);
  } catch (const LimitExceeded&) {
    rep.ratio.reset();
  }
  if (rep.ratio && rep.connected()) {
    const bool ok = *rep.ratio <= Cost(Rational(rep.diam + 1));
    rep.checks.push_back({"ratio_le_diam_plus_1", ok, exact, ok ? "" : "ratio " + to_string(*rep.ratio)});
    if (rep.structure.is_tree) {
      const bool tree_ok = *rep.ratio < Cost(5);
      rep.checks.push_back({"tree_poa_lt_5", tree_ok, exact, tree_ok ? "" : "ratio " + to_string(*rep.ratio)});
    }
  }

  if (rep.structure.unique_component_applies) {
    rep.checks.push_back({"unique_nontrivial_biconnected", rep.structure.unique_component_ok, exact,
                          std::to_string(rep.n_nontrivial) + " nontrivial components"});
  }
  if (rep.structure.tree_applies) {
    rep.checks.push_back({"tree_above_4n_minus_13", rep.structure.tree_ok, exact,
                          rep.structure.tree_ok ? "" : "not a tree"});
  }
  if (rep.degrees.asserted) {
    rep.checks.push_back({"degree_le_3n_over_alpha", rep.degrees.ok, exact,
                          rep.degrees.witness ? "node " + std::to_string(*rep.degrees.witness) : ""});
  }
  if (rep.connected()) {
    rep.checks.push_back({"diam_lt_diam_h_plus_994", rep.structure.diam_bound_ok, false, ""});
  }
  return rep;
}

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["alpha"] = rational_to_json(r.alpha);
  j["certification"] = std::string(to_string(r.certification));
  j["diam"] = r.connected() ? json(r.diam) : json(nullptr);
  j["layers_summary"] = {{"radius", r.connected() ? json(r.radius) : json(nullptr)},
                         {"layer_sizes", r.layer_sizes}};
  json unif = json::array();
  for (std::size_t i = 0; i < r.uniformity.size(); ++i) {
    const auto& c = r.uniformity[i];
    const auto& cp = r.corollary[i];
    unif.push_back({{"epsilon", rational_to_json(c.epsilon)},
                    {"r", c.r},
                    {"x", c.x},
                    {"ok", c.ok},
                    {"per_node_counts", c.per_node_counts},
                    {"power", cp.power},
                    {"power_almost_uniform", cp.almost_uniform},
                    {"power_r", cp.r}});
  }
  j["uniformity"] = unif;
  if (r.prop1) {
    j["prop1"] = {{"r", r.prop1->r},
                  {"bound", rational_to_json(r.prop1->bound)},
                  {"min_slack", rational_to_json(r.prop1->min_slack)},
                  {"ok", r.prop1->ok}};
  } else {
    j["prop1"] = nullptr;
  }
  j["biconn"] = {{"n_nontrivial", r.n_nontrivial},
                 {"bridges", r.n_bridges},
                 {"cut_vertices", to_vector(r.cut_vertices)},
                 {"is_tree", r.structure.is_tree},
                 {"diam_h", r.structure.diam_h},
                 {"diam_lt_diam_h_plus_994", r.structure.diam_bound_ok},
                 {"diam_le_1988", r.structure.within_1988},
                 {"diam_le_1998", r.structure.within_1998}};
  j["degrees"] = {{"max_degH_plus", r.degrees.max_degh_plus},
                  {"argmax", r.degrees.argmax},
                  {"n_over_alpha", cost_to_json(r.degrees.n_over_alpha)},
                  {"bound_2n_over_alpha_plus_6", cost_to_json(r.degrees.bound_2n_over_alpha_plus_6)},
                  {"bound_3n_over_alpha", cost_to_json(r.degrees.bound_3n_over_alpha)},
                  {"asserted", r.degrees.asserted},
                  {"ok", r.degrees.ok}};
  j["ratio"] = r.ratio ? cost_to_json(*r.ratio) : json(nullptr);
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"name", c.name}, {"ok", c.ok}, {"hard", c.hard}};
    if (!c.witness.empty() && !c.ok) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace ncg
