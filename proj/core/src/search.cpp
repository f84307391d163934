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

#include "ncg/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <thread>
#include <tuple>

#include "ncg/profile_io.hpp"

#ifndef NCG_VERSION
#define NCG_VERSION "unknown"
#endif

namespace ncg {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : rational_from_json(v));
  return out;
}

bool record_less(const ResultRecord& a, const ResultRecord& b) {
  if (a.game.n() != b.game.n()) return a.game.n() < b.game.n();
  if (a.game.alpha() != b.game.alpha()) return a.game.alpha() < b.game.alpha();
  return a.profile < b.profile;
}

// Runs body(w) for w in [0, workers) and waits for all of them.
void run_workers(int workers, const std::function<void(int)>& body) {
  workers = std::max(1, workers);
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ResultRecord make_record(const ExperimentConfig& config, const Game& game, const StrategyProfile& profile,
                         EquilibriumReport report, std::string source, Clock::time_point start) {
  ResultRecord rec;
  rec.config_hash = config.hash();
  rec.game = game;
  rec.profile = profile;
  rec.equilibrium = std::move(report);
  AnalysisOptions opts;
  opts.epsilons = config.epsilons;
  opts.certification = certification_for(config.verifier);
  rec.analysis = analyze(game, profile, opts);
  rec.source = std::move(source);
  rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rec;
}

void add_stats(FilterStats& into, const FilterStats& from) {
  into.visited += from.visited;
  into.rejected_drop_one += from.rejected_drop_one;
  into.rejected_add_one += from.rejected_add_one;
  into.rejected_swap_one += from.rejected_swap_one;
  into.rejected_final += from.rejected_final;
  into.certified += from.certified;
}

std::string bool_cell(std::optional<bool> b) { return b ? (*b ? "true" : "false") : ""; }

}  // namespace

std::string_view version() { return NCG_VERSION; }

nlohmann::json ExperimentConfig::to_json() const {
  return {{"n", n_values},
          {"alpha", rationals_to_json(alphas)},
          {"family", std::string(ncg::to_string(family))},
          {"class", std::string(ncg::to_string(verifier))},
          {"limits", {{"all", limits.all_max_n}, {"trees", limits.trees_max_n},
                      {"graphs_with_orientations", limits.oriented_graphs_max_n}}},
          {"limit", limit},
          {"seeds", seeds},
          {"start_edge_prob", start_edge_prob},
          {"schedule", std::string(ncg::to_string(schedule))},
          {"max_rounds", max_rounds},
          {"epsilon", rationals_to_json(epsilons)},
          {"workers", workers},
          {"output", output}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.n_values = j.at("n").get<std::vector<int>>();
  c.alphas = rationals_from_json(j.at("alpha"));
  if (j.contains("family")) c.family = parse_profile_family(j["family"].get<std::string>());
  if (j.contains("class")) c.verifier = parse_deviation_class(j["class"].get<std::string>());
  if (j.contains("limits")) {
    const auto& l = j["limits"];
    c.limits.all_max_n = l.value("all", c.limits.all_max_n);
    c.limits.trees_max_n = l.value("trees", c.limits.trees_max_n);
    c.limits.oriented_graphs_max_n = l.value("graphs_with_orientations", c.limits.oriented_graphs_max_n);
  }
  c.limit = j.value("limit", c.limit);
  if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  c.start_edge_prob = j.value("start_edge_prob", c.start_edge_prob);
  if (j.contains("schedule")) c.schedule = parse_schedule(j["schedule"].get<std::string>());
  c.max_rounds = j.value("max_rounds", c.max_rounds);
  if (j.contains("epsilon")) c.epsilons = rationals_from_json(j["epsilon"]);
  c.workers = j.value("workers", c.workers);
  c.output = j.value("output", std::string());
  return c;
}

std::string ExperimentConfig::hash() const {
  auto j = to_json();
  j.erase("workers");
  j.erase("output");
  return profile_id_from_hash(fnv1a(j.dump()));
}

Certification certification_for(DeviationClass cls) {
  switch (cls) {
    case DeviationClass::kExact: return Certification::kEquilibrium;
    case DeviationClass::kBuying: return Certification::kBuyingEquilibrium;
    default: return Certification::kNone;
  }
}

nlohmann::json to_json(const ResultRecord& r) {
  return {{"config_hash", r.config_hash},
          {"n", r.game.n()},
          {"alpha", rational_to_json(r.game.alpha())},
          {"profile_id", profile_id(r.profile)},
          {"purchases", edges_to_json(r.profile.purchase_list())},
          {"equilibrium", to_json(r.equilibrium)},
          {"analysis", to_json(r.analysis)},
          {"source", r.source},
          {"seconds", r.seconds}};
}

ResultRecord record_from_json(const nlohmann::json& j) {
  const auto inst = profile_from_json(j);
  ResultRecord r;
  r.config_hash = j.value("config_hash", std::string());
  r.game = inst.game;
  r.profile = inst.profile;
  const auto& eq = j.at("equilibrium");
  r.equilibrium.deviation_class = parse_deviation_class(eq.at("class").get<std::string>());
  r.equilibrium.equilibrium = eq.at("verdict").get<std::string>() == "equilibrium";
  r.equilibrium.necessary_only = is_necessary_only(r.equilibrium.deviation_class);
  AnalysisOptions opts;
  opts.certification =
      r.equilibrium.equilibrium ? certification_for(r.equilibrium.deviation_class) : Certification::kNone;
  r.analysis = analyze(r.game, r.profile, opts);
  r.source = j.value("source", std::string());
  r.seconds = j.value("seconds", 0.0);
  return r;
}

EquilibriumReport filtered_verify(const Game& game, const StrategyProfile& profile, DeviationClass cls,
                                  int limit, FilterStats* stats) {
  VerifyOptions opts;
  opts.limit = limit;
  std::vector<std::pair<DeviationClass, std::uint64_t FilterStats::*>> stages;
  if (cls == DeviationClass::kExact) {
    stages = {{DeviationClass::kDropOne, &FilterStats::rejected_drop_one},
              {DeviationClass::kAddOne, &FilterStats::rejected_add_one},
              {DeviationClass::kSwapOne, &FilterStats::rejected_swap_one}};
  } else if (cls == DeviationClass::kBuying) {
    stages = {{DeviationClass::kAddOne, &FilterStats::rejected_add_one}};
  }
  if (stats) ++stats->visited;
  for (const auto& [stage, counter] : stages) {
    auto rep = verify_equilibrium(game, profile, stage, opts);
    if (!rep.equilibrium) {
      if (stats) ++(stats->*counter);
      return rep;
    }
  }
  auto rep = verify_equilibrium(game, profile, cls, opts);
  if (stats) ++(rep.equilibrium ? stats->certified : stats->rejected_final);
  return rep;
}

std::vector<ResultRecord> enumerate_equilibria(const ExperimentConfig& config, FilterStats* stats) {
  std::vector<ResultRecord> out;
  FilterStats total;
  for (int n : config.n_values) {
    for (const auto& alpha : config.alphas) {
      const Game game(n, alpha);
      std::vector<std::vector<ResultRecord>> found(static_cast<std::size_t>(std::max(1, config.workers)));
      std::vector<FilterStats> local(found.size());
      run_workers(config.workers, [&](int w) {
        std::uint64_t index = 0;
        const auto workers = static_cast<std::uint64_t>(found.size());
        enumerate_profiles(
            n, config.family,
            [&](const StrategyProfile& s) {
              if (index++ % workers != static_cast<std::uint64_t>(w)) return true;
              const auto start = Clock::now();
              auto rep = filtered_verify(game, s, config.verifier, config.limit, &local[w]);
              if (rep.equilibrium) {
                found[w].push_back(make_record(config, game, s, std::move(rep), "enumeration", start));
              }
              return true;
            },
            config.limits);
      });
      for (std::size_t w = 0; w < found.size(); ++w) {
        add_stats(total, local[w]);
        for (auto& r : found[w]) out.push_back(std::move(r));
      }
    }
  }
  std::sort(out.begin(), out.end(), record_less);
  if (stats) *stats = total;
  return out;
}

std::vector<ResultRecord> hunt_equilibria(const ExperimentConfig& config,
                                          const std::vector<StrategyProfile>& extra_starts) {
  struct Start {
    int n;
    Rational alpha;
    StrategyProfile profile;
    std::uint64_t seed;
    std::string source;
  };
  std::vector<Start> starts;
  for (int n : config.n_values) {
    for (const auto& alpha : config.alphas) {
      for (auto seed : config.seeds) {
        starts.push_back({n, alpha, random_profile(n, config.start_edge_prob, seed), seed,
                          "dynamics seed=" + std::to_string(seed)});
      }
      for (std::size_t i = 0; i < extra_starts.size(); ++i) {
        if (extra_starts[i].size() != n) continue;
        starts.push_back({n, alpha, extra_starts[i], i, "dynamics start=" + std::to_string(i)});
      }
    }
  }

  struct Hit {
    std::size_t start;
    StrategyProfile profile;
    EquilibriumReport report;
    double seconds;
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, config.workers));
  std::vector<std::vector<Hit>> hits(workers);
  run_workers(config.workers, [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < starts.size(); i += workers) {
      const auto t0 = Clock::now();
      const Game game(starts[i].n, starts[i].alpha);
      DynamicsOptions dopts;
      dopts.schedule = config.schedule;
      dopts.max_rounds = config.max_rounds;
      dopts.seed = starts[i].seed;
      dopts.limit = config.limit;
      const auto trace = best_response_dynamics(game, starts[i].profile, dopts);
      if (trace.outcome != DynamicsOutcome::kFixpoint) continue;
      auto rep = filtered_verify(game, trace.final_profile, config.verifier, config.limit);
      if (!rep.equilibrium) continue;
      hits[w].push_back({i, trace.final_profile, std::move(rep),
                         std::chrono::duration<double>(Clock::now() - t0).count()});
    }
  });

  // Keep the earliest start per (n, alpha, profile).
  std::map<std::tuple<int, Rational, StrategyProfile>, Hit> unique;
  for (auto& list : hits) {
    for (auto& h : list) {
      const auto& s = starts[h.start];
      auto key = std::make_tuple(s.n, s.alpha, h.profile);
      auto it = unique.find(key);
      if (it == unique.end()) {
        unique.emplace(std::move(key), std::move(h));
      } else if (h.start < it->second.start) {
        it->second = std::move(h);
      }
    }
  }
  std::vector<ResultRecord> out;
  for (auto& [key, h] : unique) {
    const auto t0 = Clock::now();
    const Game game(std::get<0>(key), std::get<1>(key));
    auto rec = make_record(config, game, h.profile, std::move(h.report), starts[h.start].source, t0);
    rec.seconds += h.seconds;
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

SweepSummary theorem_sweep(const std::vector<ResultRecord>& records) {
  SweepSummary sum;
  for (const auto& rec : records) {
    const auto& a = rec.analysis;
    const OwnedGraph g(rec.profile);
    SweepRow row;
    row.n = rec.game.n();
    row.alpha = rec.game.alpha();
    row.profile_id = a.graph_id;
    row.diam = a.diam;
    row.diam_h = a.structure.diam_h;
    row.n_nontrivial = a.n_nontrivial;
    row.max_degh_plus = a.degrees.max_degh_plus;
    row.ratio = a.ratio;
    row.bound_2n_over_alpha_plus_6 = a.degrees.bound_2n_over_alpha_plus_6;
    if (a.connected()) {
      row.prop1_ok = check_window_inequality(g.graph(), row.alpha).ok;
      row.unif50_ok = uniformity_certificate(g.graph(), row.alpha, Rational(1, 2)).ok;
      row.unif25_ok = uniformity_certificate(g.graph(), row.alpha, Rational(1, 4)).ok;
      if (a.ratio) {
        row.diam_bound_ok = *a.ratio <= Cost(Rational(a.diam + 1));
        if (a.structure.is_tree) row.tree_poa_ok = *a.ratio < Cost(5);
      }
    }
    if (a.structure.unique_component_applies) row.biconn_ok = a.structure.unique_component_ok;
    if (a.degrees.asserted) row.degree_ok = a.degrees.ok;

    sum.prop1_pass += row.prop1_ok;
    sum.unif50_pass += row.unif50_ok;
    sum.unif25_pass += row.unif25_ok;
    if (row.diam_bound_ok) {
      ++sum.diam_bound_total;
      sum.diam_bound_pass += *row.diam_bound_ok;
    }
    if (row.tree_poa_ok) {
      ++sum.tree_poa_total;
      sum.tree_poa_pass += *row.tree_poa_ok;
    }
    for (const auto& c : a.failed_hard_checks()) {
      sum.failures.push_back("n=" + std::to_string(row.n) + " alpha=" + to_string(row.alpha) + " profile " +
                             row.profile_id + ": " + c.name + (c.witness.empty() ? "" : " (" + c.witness + ")"));
    }
    sum.rows.push_back(std::move(row));
  }
  return sum;
}

std::string to_csv(const SweepSummary& summary) {
  std::string out =
      "n,alpha,profile_id,diam,diam_H,n_nontrivial_biconn,max_degH_plus,ratio,prop1_ok,unif50_ok,unif25_ok,"
      "diam_bound_ok,tree_poa_ok,bound_2n_over_alpha_plus_6,biconn_ok,degree_3n_ok\n";
  for (const auto& r : summary.rows) {
    out += std::to_string(r.n) + "," + to_string(r.alpha) + "," + r.profile_id + "," +
           (r.diam == kUnreachable ? std::string("inf") : std::to_string(r.diam)) + "," + std::to_string(r.diam_h) +
           "," + std::to_string(r.n_nontrivial) + "," + std::to_string(r.max_degh_plus) + "," +
           (r.ratio ? to_string(*r.ratio) : std::string()) + "," + bool_cell(r.prop1_ok) + "," +
           bool_cell(r.unif50_ok) + "," + bool_cell(r.unif25_ok) + "," + bool_cell(r.diam_bound_ok) + "," +
           bool_cell(r.tree_poa_ok) + "," + to_string(r.bound_2n_over_alpha_plus_6) + "," + bool_cell(r.biconn_ok) +
           "," + bool_cell(r.degree_ok) + "\n";
  }
  return out;
}

nlohmann::json to_json(const SweepSummary& s) {
  return {{"records", s.rows.size()},
          {"prop1_pass", s.prop1_pass},
          {"unif50_pass", s.unif50_pass},
          {"unif25_pass", s.unif25_pass},
          {"diam_bound_pass", s.diam_bound_pass},
          {"diam_bound_total", s.diam_bound_total},
          {"tree_poa_pass", s.tree_poa_pass},
          {"tree_poa_total", s.tree_poa_total},
          {"hard_failures", s.failures}};
}

void write_records(const std::string& path, const ExperimentConfig& config,
                   const std::vector<ResultRecord>& records) {
  {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& r : records) out << to_json(r).dump() << '\n';
  }
  std::ofstream manifest(path + ".manifest.json");
  if (!manifest) throw std::runtime_error("cannot open " + path + ".manifest.json");
  manifest << nlohmann::json{{"config", config.to_json()},
                             {"config_hash", config.hash()},
                             {"version", std::string(version())},
                             {"appended", records.size()}}
                  .dump(2)
           << '\n';
}

std::vector<ResultRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ResultRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

}  // namespace ncg
