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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include "ncg/profile_io.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is merged into `out` when asked.
Run ncg_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(NCG_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("ncg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ConstructVerifyAnalyzePipeline) {
  const auto cos = file("cos.txt");
  ASSERT_EQ(ncg_cli("construct --kind clique_of_stars --params k=3,l=3 -o " + cos).exit_code, 0);
  const auto inst = ncg::read_profile_file(cos);
  EXPECT_EQ(inst.game.n(), 9);
  EXPECT_EQ(inst.game.alpha(), ncg::Rational(3));

  const auto verify = ncg_cli("verify -i " + cos + " --class exact");
  EXPECT_EQ(verify.exit_code, 0);
  EXPECT_NE(verify.out.find("verdict: equilibrium"), std::string::npos) << verify.out;

  const auto text = ncg_cli("analyze -i " + cos);
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("certification: exact"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("ratio: 177/152"), std::string::npos) << text.out;

  const auto json = ncg_cli("--format json analyze -i " + cos);
  ASSERT_EQ(json.exit_code, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["ratio"]["num"], 177);
  EXPECT_EQ(j["ratio"]["den"], 152);
  EXPECT_EQ(j["diam"], 3);
  EXPECT_EQ(j["certification"], "exact");
  EXPECT_NE(text.out.find("diam: " + std::to_string(j["diam"].get<int>())), std::string::npos);
  EXPECT_NE(text.out.find("graph_id: " + j["graph_id"].get<std::string>()), std::string::npos);
}

TEST_F(CliTest, VerifyReportsViolationsWithoutFailing) {
  write("path.txt", "ncg n=4 alpha=1/4\n0 1\n1 2\n2 3\n");
  const auto r = ncg_cli("--format json verify -i " + file("path.txt"));
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "violated");
  EXPECT_TRUE(j.contains("witness"));
  const auto add = ncg_cli("verify -i " + file("path.txt") + " --class add_one");
  EXPECT_NE(add.out.find("necessary_only: true"), std::string::npos) << add.out;
}

TEST_F(CliTest, StdinInputAndAlphaOverride) {
  const auto star = file("star.txt");
  ASSERT_EQ(ncg_cli("construct --kind star --params n=5,alpha=1/2 -o " + star).exit_code, 0);
  const auto piped = ncg_cli("verify -i - < " + star);
  EXPECT_EQ(piped.exit_code, 0);
  EXPECT_NE(piped.out.find("verdict: violated"), std::string::npos) << piped.out;
  const auto high = ncg_cli("verify -i " + star + " --alpha 2");
  EXPECT_NE(high.out.find("verdict: equilibrium"), std::string::npos) << high.out;
}

TEST_F(CliTest, HardFailureExitsOne) {
  const auto p = file("long.txt");
  ASSERT_EQ(ncg_cli("construct --kind path --params n=12,alpha=0 -o " + p).exit_code, 0);
  EXPECT_EQ(ncg_cli("analyze -i " + p + " --certify none").exit_code, 0);
  const auto r = ncg_cli("analyze -i " + p + " --certify buying", true);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("assertion failed: prop1_window"), std::string::npos) << r.out;
}

TEST_F(CliTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(ncg_cli("").exit_code, 2);
  EXPECT_EQ(ncg_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(ncg_cli("verify").exit_code, 2);
  EXPECT_EQ(ncg_cli("construct --kind hypercube --params n=3").exit_code, 2);
  EXPECT_EQ(ncg_cli("verify -i " + file("missing.txt")).exit_code, 2);
  write("self.txt", "ncg n=3 alpha=1\n0 0\n");
  const auto r = ncg_cli("verify -i " + file("self.txt"), true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
  write("decimal.txt", "ncg n=3 alpha=0.5\n0 1\n");
  EXPECT_EQ(ncg_cli("verify -i " + file("decimal.txt")).exit_code, 2);
  EXPECT_EQ(ncg_cli("--format xml verify -i " + file("self.txt")).exit_code, 2);
  EXPECT_EQ(ncg_cli("verify -i " + file("decimal.txt") + " --class bogus").exit_code, 2);
}

TEST_F(CliTest, SearchWritesRecordsAndReportReadsThem) {
  const auto out = file("records.jsonl");
  const auto s = ncg_cli("search --n 3 --alpha 1/2,2 --family all --class exact -o " + out);
  ASSERT_EQ(s.exit_code, 0) << s.out;
  EXPECT_NE(s.out.find("records: 20"), std::string::npos) << s.out;
  EXPECT_TRUE(std::filesystem::exists(out + ".manifest.json"));

  const auto csv = ncg_cli("report -i " + out);
  EXPECT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out.rfind("n,alpha,profile_id,diam,diam_H", 0), 0U) << csv.out;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 21);

  const auto json = ncg_cli("--format json report -i " + out);
  ASSERT_EQ(json.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(json.out)["records"], 20);

  // Same search with more workers produces byte-identical records apart
  // from timing.
  const auto out4 = file("records4.jsonl");
  ASSERT_EQ(ncg_cli("--workers 4 search --n 3 --alpha 1/2,2 -o " + out4).exit_code, 0);
  auto strip = [](const std::string& path) {
    std::ifstream in(path);
    std::vector<nlohmann::json> rows;
    std::string line;
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line);
      j.erase("seconds");
      rows.push_back(j);
    }
    return rows;
  };
  EXPECT_EQ(strip(out), strip(out4));
}

TEST_F(CliTest, HuntAndDynamics) {
  const auto hunt = ncg_cli("--format json search --n 6 --alpha 2 --mode hunt --seeds 0..4");
  ASSERT_EQ(hunt.exit_code, 0) << hunt.out;
  const auto j = nlohmann::json::parse(hunt.out);
  EXPECT_GE(j["records"].get<int>(), 1);
  for (const auto& item : j["items"]) EXPECT_EQ(item["equilibrium"]["verdict"], "equilibrium");

  const auto start = file("start.txt");
  const auto fin = file("final.txt");
  ASSERT_EQ(ncg_cli("construct --kind path --params n=6,alpha=2 -o " + start).exit_code, 0);
  const auto d = ncg_cli("dynamics -i " + start + " --final " + fin);
  EXPECT_EQ(d.exit_code, 0);
  EXPECT_NE(d.out.find("outcome: fixpoint"), std::string::npos) << d.out;
  const auto v = ncg_cli("verify -i " + fin);
  EXPECT_NE(v.out.find("verdict: equilibrium"), std::string::npos) << v.out;
}

}  // namespace
