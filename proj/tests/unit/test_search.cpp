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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ncg/profile_io.hpp"
#include "ncg/search.hpp"
#include "test_util.hpp"

namespace ncg {
namespace {

using testing::q;

ExperimentConfig enum_config(int n, std::vector<Rational> alphas, ProfileFamily family = ProfileFamily::kAll) {
  ExperimentConfig c;
  c.n_values = {n};
  c.alphas = std::move(alphas);
  c.family = family;
  return c;
}

// Record JSON without the wall-clock field.
nlohmann::json stable_json(const ResultRecord& r) {
  auto j = to_json(r);
  j.erase("seconds");
  return j;
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ncg_test_search";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::filesystem::remove(p);
  std::filesystem::remove(p.string() + ".manifest.json");
  return p;
}

TEST(Enumerate, ThreePlayersMatchesOracle) {
  const auto records = enumerate_equilibria(enum_config(3, {q(1, 2), q(2)}));
  std::map<Rational, std::set<StrategyProfile>> found;
  for (const auto& r : records) {
    EXPECT_TRUE(r.equilibrium.equilibrium);
    EXPECT_EQ(r.analysis.certification, Certification::kEquilibrium);
    found[r.game.alpha()].insert(r.profile);
  }
  EXPECT_EQ(found[q(1, 2)].size(), 8U);
  EXPECT_EQ(found[q(2)].size(), 12U);
  for (const auto& alpha : {q(1, 2), q(2)}) {
    std::set<StrategyProfile> expected;
    enumerate_profiles(3, ProfileFamily::kAll, [&](const StrategyProfile& s) {
      if (oracle::is_nash(oracle::from_library(s), alpha)) expected.insert(s);
      return true;
    });
    EXPECT_EQ(found[alpha], expected) << alpha;
  }
}

TEST(Enumerate, DeterministicAndWorkerIndependent) {
  auto config = enum_config(4, {q(1), q(5, 2)});
  const auto one = enumerate_equilibria(config);
  config.workers = 3;
  const auto three = enumerate_equilibria(config);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(stable_json(one[i]), stable_json(three[i]));
  for (std::size_t i = 1; i < one.size(); ++i) {
    const auto& a = one[i - 1];
    const auto& b = one[i];
    EXPECT_TRUE(a.game.alpha() < b.game.alpha() || (a.game.alpha() == b.game.alpha() && a.profile < b.profile));
  }
}

TEST(Enumerate, HighPriceGivesTrees) {
  const auto records = enumerate_equilibria(enum_config(4, {q(10)}));
  EXPECT_EQ(records.size(), 56U);
  for (const auto& r : records) {
    EXPECT_TRUE(r.analysis.structure.is_tree) << r.analysis.graph_id;
    EXPECT_FALSE(r.analysis.hard_failure());
  }
}

TEST(Enumerate, LowPriceGivesCliques) {
  const auto records = enumerate_equilibria(enum_config(4, {q(1, 4)}));
  EXPECT_EQ(records.size(), 64U);
  for (const auto& r : records) EXPECT_EQ(r.analysis.diam, 1);
}

TEST(Enumerate, BuyingClassAndStats) {
  auto config = enum_config(3, {q(2)});
  config.verifier = DeviationClass::kBuying;
  FilterStats stats;
  const auto records = enumerate_equilibria(config, &stats);
  EXPECT_EQ(records.size(), 20U);
  EXPECT_EQ(stats.visited, 27U);
  EXPECT_EQ(stats.certified, 20U);
  EXPECT_EQ(stats.visited, stats.certified + stats.rejected_add_one + stats.rejected_final);
  for (const auto& r : records) EXPECT_EQ(r.analysis.certification, Certification::kBuyingEquilibrium);
}

TEST(FilteredVerify, AgreesWithDirectVerification) {
  for (const auto& alpha : {q(1, 2), q(1), q(3)}) {
    const Game game(4, alpha);
    FilterStats stats;
    enumerate_profiles(4, ProfileFamily::kAll, [&](const StrategyProfile& s) {
      for (auto cls : {DeviationClass::kExact, DeviationClass::kBuying}) {
        const bool filtered = filtered_verify(game, s, cls, kDefaultBestResponseLimit, &stats).equilibrium;
        EXPECT_EQ(filtered, verify_equilibrium(game, s, cls).equilibrium);
      }
      return true;
    });
    EXPECT_EQ(stats.visited, 2U * 729U);
    EXPECT_EQ(stats.visited, stats.certified + stats.rejected_drop_one + stats.rejected_add_one +
                                 stats.rejected_swap_one + stats.rejected_final);
  }
}

TEST(Hunt, FixpointsAreVerifiedAndUnique) {
  ExperimentConfig config;
  config.n_values = {6, 7};
  config.alphas = {q(2), q(5)};
  config.seeds = {0, 1, 2, 3, 4, 5, 6, 7};
  const auto records = hunt_equilibria(config);
  EXPECT_FALSE(records.empty());
  std::set<std::tuple<int, Rational, StrategyProfile>> keys;
  for (const auto& r : records) {
    EXPECT_TRUE(verify_equilibrium(r.game, r.profile, DeviationClass::kExact).equilibrium);
    EXPECT_TRUE(keys.insert({r.game.n(), r.game.alpha(), r.profile}).second);
    EXPECT_EQ(r.source.rfind("dynamics seed=", 0), 0U) << r.source;
  }
  config.workers = 4;
  const auto again = hunt_equilibria(config);
  ASSERT_EQ(records.size(), again.size());
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(stable_json(records[i]), stable_json(again[i]));
}

TEST(Hunt, ExtraStartsKeepEarliest) {
  ExperimentConfig config;
  config.n_values = {6};
  config.alphas = {q(2)};
  const auto records = hunt_equilibria(config, {star(5), star(6), star(6), path(6)});
  ASSERT_FALSE(records.empty());
  bool saw_star = false;
  for (const auto& r : records) {
    if (r.profile == star(6)) {
      saw_star = true;
      EXPECT_EQ(r.source, "dynamics start=1");
    }
  }
  EXPECT_TRUE(saw_star);
}

TEST(Sweep, CsvColumnsAndCounts) {
  const auto records = enumerate_equilibria(enum_config(3, {q(1, 2), q(2)}));
  const auto sweep = theorem_sweep(records);
  EXPECT_EQ(sweep.rows.size(), records.size());
  EXPECT_FALSE(sweep.hard_failure());
  EXPECT_EQ(sweep.prop1_pass, static_cast<int>(records.size()));
  EXPECT_EQ(sweep.unif50_pass, static_cast<int>(records.size()));
  const auto csv = to_csv(sweep);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("n,alpha,profile_id,diam,diam_H,n_nontrivial_biconn,max_degH_plus,ratio,prop1_ok,"
                         "unif50_ok,unif25_ok,diam_bound_ok,tree_poa_ok",
                         0),
            0U);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), std::count(header.begin(), header.end(), ','));
  }
  EXPECT_EQ(lines, static_cast<int>(records.size()));
  const auto j = to_json(sweep);
  EXPECT_EQ(j["records"], records.size());
  EXPECT_TRUE(j["hard_failures"].empty());
}

TEST(Sweep, EmptyInput) {
  const auto sweep = theorem_sweep({});
  EXPECT_TRUE(sweep.rows.empty());
  EXPECT_FALSE(sweep.hard_failure());
  const auto csv = to_csv(sweep);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
}

TEST(Persistence, RoundTripAndManifest) {
  auto config = enum_config(3, {q(2)});
  const auto records = enumerate_equilibria(config);
  const auto path = temp_file("records.jsonl");
  write_records(path.string(), config, records);
  write_records(path.string(), config, records);
  const auto back = read_records(path.string());
  ASSERT_EQ(back.size(), 2 * records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(stable_json(back[i]), stable_json(records[i]));
    EXPECT_EQ(back[i + records.size()].profile, records[i].profile);
  }
  std::ifstream m(path.string() + ".manifest.json");
  const auto manifest = nlohmann::json::parse(m);
  EXPECT_EQ(manifest["config_hash"], config.hash());
  EXPECT_EQ(manifest["version"], std::string(version()));
  EXPECT_EQ(manifest["appended"], records.size());
  EXPECT_EQ(ExperimentConfig::from_json(manifest["config"]).hash(), config.hash());
}

TEST(Persistence, BadLineReportsLineNumber) {
  const auto path = temp_file("bad.jsonl");
  const auto records = enumerate_equilibria(enum_config(3, {q(2)}));
  {
    std::ofstream out(path);
    out << to_json(records[0]).dump() << "\n\n{\"n\": 3\n";
  }
  try {
    read_records(path.string());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Config, HashAndJson) {
  auto a = enum_config(4, {q(1), q(2)});
  const auto h = a.hash();
  EXPECT_EQ(h, enum_config(4, {q(1), q(2)}).hash());
  a.workers = 8;
  a.output = "elsewhere.jsonl";
  EXPECT_EQ(a.hash(), h);
  a.alphas.push_back(q(3));
  EXPECT_NE(a.hash(), h);
  a.seeds = {1, 2, 3};
  a.verifier = DeviationClass::kBuying;
  a.schedule = Schedule::kRoundRobin;
  const auto back = ExperimentConfig::from_json(a.to_json());
  EXPECT_EQ(back.to_json(), a.to_json());
  EXPECT_EQ(a.to_json()["alpha"][0], "1");
  EXPECT_EQ(certification_for(DeviationClass::kExact), Certification::kEquilibrium);
  EXPECT_EQ(certification_for(DeviationClass::kBuying), Certification::kBuyingEquilibrium);
  EXPECT_EQ(certification_for(DeviationClass::kAddOne), Certification::kNone);
  EXPECT_FALSE(version().empty());
}

}  // namespace
}  // namespace ncg
