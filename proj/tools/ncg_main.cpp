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

// ncg: command-line front end for the network creation game toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/constructions.hpp"
#include "ncg/deviation.hpp"
#include "ncg/dynamics.hpp"
#include "ncg/profile_io.hpp"
#include "ncg/search.hpp"
#include "ncg/theorem_checks.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "text";
  int workers = 1;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

ncg::GameInstance load(const std::string& path, const std::string& alpha_override) {
  // "-" reads the profile from standard input.
  auto inst = [&] {
    if (path != "-") return ncg::read_profile_file(path);
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return ncg::parse_profile_text(buf.str());
  }();
  if (!alpha_override.empty()) inst.game = ncg::Game(inst.game.n(), ncg::parse_rational(alpha_override));
  return inst;
}

std::string set_text(ncg::NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (ncg::Node v : ncg::to_vector(s)) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string witness_text(const ncg::DeviationDelta& d) {
  return "player " + std::to_string(d.deviation.player) + " sells " + set_text(d.deviation.sell) + " buys " +
         set_text(d.deviation.buy) + " delta " + ncg::to_string(d.delta) + " (" + d.derivation + ")";
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::string params;
  std::uint64_t seed = 0;
  std::string output;
};

int run_construct(const ConstructArgs& a) {
  const auto kind = ncg::parse_construction_kind(a.kind);
  const auto spec = ncg::ConstructionSpec::parse(kind, a.params, a.seed);
  const auto profile = ncg::make(spec);
  ncg::Rational alpha(1);
  if (spec.alpha) {
    alpha = *spec.alpha;
  } else if (kind == ncg::ConstructionKind::kCliqueOfStars) {
    alpha = ncg::Rational(spec.l);
  }
  emit(a.output, ncg::format_profile_text(ncg::Game(profile.size(), alpha), profile));
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string alpha;
  std::string cls = "exact";
  int limit = ncg::kDefaultBestResponseLimit;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
  const auto inst = load(a.input, a.alpha);
  ncg::VerifyOptions opts;
  opts.limit = a.limit;
  const auto rep = ncg::verify_equilibrium(inst.game, inst.profile, ncg::parse_deviation_class(a.cls), opts);
  if (g.format == "json") {
    std::cout << ncg::to_json(rep).dump(2) << '\n';
  } else {
    std::cout << "class: " << ncg::to_string(rep.deviation_class) << '\n'
              << "verdict: " << (rep.equilibrium ? "equilibrium" : "violated") << '\n'
              << "necessary_only: " << (rep.necessary_only ? "true" : "false") << '\n';
    if (rep.witness) std::cout << "witness: " << witness_text(*rep.witness) << '\n';
  }
  return kExitOk;
}

// analyze --------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string alpha;
  std::vector<std::string> epsilons;
  std::string certify = "auto";
  int limit = ncg::kDefaultBestResponseLimit;
};

ncg::Certification certify(const ncg::GameInstance& inst, const AnalyzeArgs& a) {
  if (a.certify == "none") return ncg::Certification::kNone;
  if (a.certify == "buying") return ncg::Certification::kBuyingEquilibrium;
  if (a.certify == "exact") return ncg::Certification::kEquilibrium;
  if (a.certify != "auto") throw UsageError("--certify must be auto, none, buying or exact");
  if (inst.game.n() > a.limit) return ncg::Certification::kNone;
  ncg::VerifyOptions opts;
  opts.limit = a.limit;
  if (ncg::verify_equilibrium(inst.game, inst.profile, ncg::DeviationClass::kExact, opts).equilibrium) {
    return ncg::Certification::kEquilibrium;
  }
  if (ncg::verify_equilibrium(inst.game, inst.profile, ncg::DeviationClass::kBuying, opts).equilibrium) {
    return ncg::Certification::kBuyingEquilibrium;
  }
  return ncg::Certification::kNone;
}

void print_analysis_text(const ncg::AnalysisReport& r) {
  std::cout << "graph_id: " << r.graph_id << '\n'
            << "n: " << r.n << '\n'
            << "alpha: " << ncg::to_string(r.alpha) << '\n'
            << "certification: " << ncg::to_string(r.certification) << '\n'
            << "diam: " << (r.connected() ? std::to_string(r.diam) : "inf") << '\n';
  for (std::size_t i = 0; i < r.uniformity.size(); ++i) {
    const auto& u = r.uniformity[i];
    std::cout << "uniformity epsilon=" << ncg::to_string(u.epsilon) << " r=" << u.r << " x=" << u.x
              << " ok=" << (u.ok ? "true" : "false") << " power=" << r.corollary[i].power
              << " power_almost_uniform=" << (r.corollary[i].almost_uniform ? "true" : "false") << '\n';
  }
  if (r.prop1) {
    std::cout << "prop1: r=" << r.prop1->r << " min_slack=" << ncg::to_string(r.prop1->min_slack)
              << " ok=" << (r.prop1->ok ? "true" : "false") << '\n';
  }
  std::cout << "biconn: n_nontrivial=" << r.n_nontrivial << " bridges=" << r.n_bridges
            << " is_tree=" << (r.structure.is_tree ? "true" : "false") << " diam_h=" << r.structure.diam_h << '\n'
            << "degrees: max_degH_plus=" << r.degrees.max_degh_plus
            << " bound_2n_over_alpha_plus_6=" << ncg::to_string(r.degrees.bound_2n_over_alpha_plus_6)
            << " bound_3n_over_alpha=" << ncg::to_string(r.degrees.bound_3n_over_alpha) << '\n'
            << "ratio: " << (r.ratio ? ncg::to_string(*r.ratio) : "unavailable") << '\n';
  for (const auto& c : r.checks) {
    std::cout << "check " << c.name << ": " << (c.ok ? "ok" : "FAIL") << (c.hard ? " [hard]" : "");
    if (!c.ok && !c.witness.empty()) std::cout << " witness: " << c.witness;
    std::cout << '\n';
  }
}

int run_analyze(const AnalyzeArgs& a, const Globals& g) {
  const auto inst = load(a.input, a.alpha);
  ncg::AnalysisOptions opts;
  if (!a.epsilons.empty()) {
    opts.epsilons.clear();
    for (const auto& e : a.epsilons) opts.epsilons.push_back(ncg::parse_rational(e));
  }
  opts.certification = certify(inst, a);
  const auto rep = ncg::analyze(inst.game, inst.profile, opts);
  if (g.format == "json") {
    std::cout << ncg::to_json(rep).dump(2) << '\n';
  } else {
    print_analysis_text(rep);
  }
  if (rep.hard_failure()) {
    for (const auto& c : rep.failed_hard_checks()) {
      std::cerr << "assertion failed: " << c.name << (c.witness.empty() ? "" : " (" + c.witness + ")") << '\n';
    }
    return kExitAssertion;
  }
  return kExitOk;
}

// search ---------------------------------------------------------------------

struct SearchArgs {
  std::vector<int> n;
  std::vector<std::string> alphas;
  std::string family = "all";
  std::string cls = "exact";
  std::string seeds;
  std::vector<std::string> starts;
  std::string mode = "auto";
  std::string schedule = "random_permutation";
  int max_rounds = 100;
  double edge_prob = 0.5;
  int limit = ncg::kDefaultBestResponseLimit;
  std::string config;
  std::string output;
};

// "100" means seeds 0..99; "3,7,9" lists them; "10..19" is a range.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const auto lo = std::stoull(text.substr(0, dots));
    const auto hi = std::stoull(text.substr(dots + 2));
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  } else if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
  } else {
    const auto count = std::stoull(text);
    for (std::uint64_t s = 0; s < count; ++s) out.push_back(s);
  }
  return out;
}

int run_search(const SearchArgs& a, const Globals& g) {
  ncg::ExperimentConfig cfg;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw UsageError("cannot open " + a.config);
    cfg = ncg::ExperimentConfig::from_json(nlohmann::json::parse(in));
  } else {
    if (a.n.empty() || a.alphas.empty()) throw UsageError("search needs --n and --alpha (or --config)");
    cfg.n_values = a.n;
    for (const auto& s : a.alphas) cfg.alphas.push_back(ncg::parse_rational(s));
    cfg.family = ncg::parse_profile_family(a.family);
    cfg.verifier = ncg::parse_deviation_class(a.cls);
    cfg.seeds = parse_seeds(a.seeds);
    cfg.schedule = ncg::parse_schedule(a.schedule);
    cfg.max_rounds = a.max_rounds;
    cfg.start_edge_prob = a.edge_prob;
    cfg.limit = a.limit;
  }
  cfg.workers = g.workers;
  cfg.output = a.output;

  std::vector<ncg::StrategyProfile> starts;
  for (const auto& path : a.starts) starts.push_back(ncg::read_profile_file(path).profile);
  const bool hunt = a.mode == "hunt" || (a.mode == "auto" && (!cfg.seeds.empty() || !starts.empty()));
  if (a.mode != "auto" && a.mode != "hunt" && a.mode != "enumerate") {
    throw UsageError("--mode must be auto, enumerate or hunt");
  }

  ncg::FilterStats stats;
  const auto records = hunt ? ncg::hunt_equilibria(cfg, starts) : ncg::enumerate_equilibria(cfg, &stats);
  if (!a.output.empty()) ncg::write_records(a.output, cfg, records);

  const auto sweep = ncg::theorem_sweep(records);
  if (g.format == "json") {
    nlohmann::json j = {{"config_hash", cfg.hash()},
                        {"mode", hunt ? "hunt" : "enumerate"},
                        {"records", records.size()},
                        {"summary", ncg::to_json(sweep)}};
    if (!hunt) {
      j["filters"] = {{"visited", stats.visited},
                      {"rejected_drop_one", stats.rejected_drop_one},
                      {"rejected_add_one", stats.rejected_add_one},
                      {"rejected_swap_one", stats.rejected_swap_one},
                      {"rejected_final", stats.rejected_final},
                      {"certified", stats.certified}};
    }
    if (a.output.empty()) {
      j["items"] = nlohmann::json::array();
      for (const auto& r : records) j["items"].push_back(ncg::to_json(r));
    }
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << ncg::to_csv(sweep);
  } else {
    std::cout << "config_hash: " << cfg.hash() << '\n'
              << "mode: " << (hunt ? "hunt" : "enumerate") << '\n'
              << "records: " << records.size() << '\n';
    if (!hunt) {
      std::cout << "visited: " << stats.visited << " rejected drop_one/add_one/swap_one/final: "
                << stats.rejected_drop_one << '/' << stats.rejected_add_one << '/' << stats.rejected_swap_one
                << '/' << stats.rejected_final << '\n';
    }
    if (a.output.empty()) {
      for (const auto& r : records) {
        std::cout << "n=" << r.game.n() << " alpha=" << ncg::to_string(r.game.alpha()) << " "
                  << ncg::profile_id(r.profile) << " diam=" << r.analysis.diam << " source=" << r.source << '\n';
      }
    }
  }
  for (const auto& f : sweep.failures) std::cerr << "assertion failed: " << f << '\n';
  return sweep.hard_failure() ? kExitAssertion : kExitOk;
}

// dynamics -------------------------------------------------------------------

struct DynamicsArgs {
  std::string input;
  std::string alpha;
  std::string schedule = "round_robin";
  int max_rounds = 100;
  std::uint64_t seed = 0;
  int limit = ncg::kDefaultBestResponseLimit;
  std::string output;
  std::string final_profile;
};

int run_dynamics(const DynamicsArgs& a, const Globals& g) {
  const auto inst = load(a.input, a.alpha);
  ncg::DynamicsOptions opts;
  opts.schedule = ncg::parse_schedule(a.schedule);
  opts.max_rounds = a.max_rounds;
  opts.seed = a.seed;
  opts.limit = a.limit;
  const auto trace = ncg::best_response_dynamics(inst.game, inst.profile, opts);
  const auto j = ncg::to_json(trace, inst.game);
  if (!a.output.empty()) emit(a.output, j.dump(2) + "\n");
  if (!a.final_profile.empty()) ncg::write_profile_file(a.final_profile, inst.game, trace.final_profile);
  if (g.format == "json") {
    if (a.output.empty()) std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "outcome: " << ncg::to_string(trace.outcome) << '\n'
              << "rounds: " << trace.rounds << '\n'
              << "moves: " << trace.moves.size() << '\n'
              << "final: " << ncg::profile_id(trace.final_profile) << '\n';
  }
  return kExitOk;
}

// report ---------------------------------------------------------------------

struct ReportArgs {
  std::string input;
  std::string output;
};

int run_report(const ReportArgs& a, const Globals& g) {
  const auto records = ncg::read_records(a.input);
  const auto sweep = ncg::theorem_sweep(records);
  if (g.format == "json") {
    emit(a.output, ncg::to_json(sweep).dump(2) + "\n");
  } else {
    emit(a.output, ncg::to_csv(sweep));
    if (!a.output.empty()) {
      std::cout << "records: " << sweep.rows.size() << " prop1: " << sweep.prop1_pass
                << " unif50: " << sweep.unif50_pass << " unif25: " << sweep.unif25_pass
                << " diam_bound: " << sweep.diam_bound_pass << '/' << sweep.diam_bound_total
                << " tree_poa: " << sweep.tree_poa_pass << '/' << sweep.tree_poa_total << '\n';
    }
  }
  for (const auto& f : sweep.failures) std::cerr << "assertion failed: " << f << '\n';
  return sweep.hard_failure() ? kExitAssertion : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network creation game toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--workers", globals.workers, "Worker threads")->check(CLI::PositiveNumber);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Write a canonical profile");
  c->add_option("--kind", construct.kind, "star|clique|path|cycle|tree_from_pruefer|clique_of_stars|random")
      ->required();
  c->add_option("--params", construct.params, "Comma-separated key=value parameters");
  c->add_option("--seed", construct.seed, "Seed for random constructions");
  c->add_option("-o,--output", construct.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a profile for equilibrium");
  v->add_option("-i,--input", verify.input, "Profile file, - for stdin")->required();
  v->add_option("--alpha", verify.alpha, "Override link price (p/q or integer)");
  v->add_option("--class", verify.cls, "Deviation class");
  v->add_option("--limit", verify.limit, "Largest n for exhaustive best response");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Structural report of a profile");
  an->add_option("-i,--input", analyze.input, "Profile file, - for stdin")->required();
  an->add_option("--alpha", analyze.alpha, "Override link price");
  an->add_option("--epsilon", analyze.epsilons, "Uniformity epsilon (repeatable)")->take_last()->multi_option_policy(
      CLI::MultiOptionPolicy::TakeAll);
  an->add_option("--certify", analyze.certify, "auto|none|buying|exact");
  an->add_option("--limit", analyze.limit, "Largest n verified under --certify auto");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Enumerate or hunt equilibria");
  s->add_option("--n", search.n, "Player counts")->delimiter(',');
  s->add_option("--alpha", search.alphas, "Link prices")->delimiter(',');
  s->add_option("--family", search.family, "all|trees|graphs_with_orientations");
  s->add_option("--class", search.cls, "Verifier class");
  s->add_option("--seeds", search.seeds, "Seed count, list a,b,c or range a..b");
  s->add_option("--start", search.starts, "Extra starting profile (repeatable)");
  s->add_option("--mode", search.mode, "auto|enumerate|hunt");
  s->add_option("--schedule", search.schedule, "round_robin|random_permutation");
  s->add_option("--max-rounds", search.max_rounds, "Dynamics round limit");
  s->add_option("--edge-prob", search.edge_prob, "Edge probability of random starts");
  s->add_option("--limit", search.limit, "Largest n for exhaustive best response");
  s->add_option("--config", search.config, "ExperimentConfig JSON file");
  s->add_option("-o,--output", search.output, "JSON-lines output");

  DynamicsArgs dynamics;
  auto* d = app.add_subcommand("dynamics", "Run best-response dynamics");
  d->add_option("-i,--input", dynamics.input, "Starting profile")->required();
  d->add_option("--alpha", dynamics.alpha, "Override link price");
  d->add_option("--schedule", dynamics.schedule, "round_robin|random_permutation");
  d->add_option("--max-rounds", dynamics.max_rounds, "Round limit");
  d->add_option("--seed", dynamics.seed, "Shuffle seed");
  d->add_option("--limit", dynamics.limit, "Largest n for exhaustive best response");
  d->add_option("-o,--output", dynamics.output, "Trace JSON output");
  d->add_option("--final", dynamics.final_profile, "Write the final profile here");

  ReportArgs report;
  auto* r = app.add_subcommand("report", "Theorem sweep over stored records");
  r->add_option("-i,--input", report.input, "JSON-lines records")->required();
  r->add_option("-o,--output", report.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c) return run_construct(construct);
    if (*v) return run_verify(verify, globals);
    if (*an) return run_analyze(analyze, globals);
    if (*s) return run_search(search, globals);
    if (*d) return run_dynamics(dynamics, globals);
    if (*r) return run_report(report, globals);
  } catch (const ncg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ncg::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
