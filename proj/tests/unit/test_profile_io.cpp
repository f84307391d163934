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

#include <cstdio>
#include <filesystem>

#include "ncg/constructions.hpp"
#include "ncg/profile_io.hpp"
#include "test_util.hpp"

namespace ncg {
namespace {

using testing::q;

TEST(ProfileText, ParsesHeaderCommentsAndPurchases) {
  const auto inst = parse_profile_text(
      "# a star\n"
      "ncg n=4 alpha=2/1\n"
      "\n"
      "1 0   # leaf one\n"
      "2 0\n"
      "3 0\n");
  EXPECT_EQ(inst.game.n(), 4);
  EXPECT_EQ(inst.game.alpha(), q(2));
  EXPECT_EQ(inst.profile, star(4));
}

TEST(ProfileText, IntegerAlphaAccepted) {
  EXPECT_EQ(parse_profile_text("ncg n=2 alpha=3\n0 1\n").game.alpha(), q(3));
}

int error_line(const std::string& text) {
  try {
    parse_profile_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ProfileText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("ncg n=3 alpha=1/2\n0 1\n2 2\n"), 3);
  EXPECT_EQ(error_line("ncg n=3 alpha=1/2\n0 1\n0 1\n"), 3);
  EXPECT_EQ(error_line("ncg n=3 alpha=1/2\n0 5\n"), 2);
  EXPECT_EQ(error_line("ncg n=3 alpha=0.5\n"), 1);
  EXPECT_EQ(error_line("ncg n=3\n"), 1);
  EXPECT_EQ(error_line("graph n=3 alpha=1\n"), 1);
  EXPECT_EQ(error_line("ncg n=3 alpha=1\n0\n"), 2);
  EXPECT_EQ(error_line("ncg n=3 alpha=1\n0 x\n"), 2);
  EXPECT_EQ(error_line(""), 0);
}

TEST(ProfileText, FormatRoundTrips) {
  const Game game(9, q(3));
  const auto s = clique_of_stars(3, 3);
  const auto text = format_profile_text(game, s);
  EXPECT_EQ(text.rfind("ncg n=9 alpha=3/1\n", 0), 0U);
  const auto back = parse_profile_text(text);
  EXPECT_EQ(back.profile, s);
  EXPECT_EQ(back.game.alpha(), q(3));
  EXPECT_EQ(format_profile_text(back.game, back.profile), text);
}

TEST(ProfileFile, WriteThenRead) {
  const auto file = (std::filesystem::temp_directory_path() / "ncg_profile_io_test.txt").string();
  write_profile_file(file, Game(5, q(7, 3)), path(5));
  const auto inst = read_profile_file(file);
  EXPECT_EQ(inst.game.alpha(), q(7, 3));
  EXPECT_EQ(inst.profile, path(5));
  std::remove(file.c_str());
  EXPECT_THROW(read_profile_file(file), std::runtime_error);
}

TEST(ProfileJson, RoundTrip) {
  const Game game(4, q(5, 2));
  const auto j = profile_to_json(game, star(4));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["alpha"]["num"], 5);
  EXPECT_EQ(j["alpha"]["den"], 2);
  EXPECT_EQ(j["purchases"].size(), 3U);
  const auto back = profile_from_json(j);
  EXPECT_EQ(back.profile, star(4));
  EXPECT_EQ(back.game.alpha(), q(5, 2));
}

TEST(CostJson, Infinities) {
  EXPECT_EQ(cost_from_json(cost_to_json(Cost::infinity())), Cost::infinity());
  EXPECT_EQ(cost_from_json(cost_to_json(Cost::neg_infinity())), Cost::neg_infinity());
  EXPECT_EQ(cost_from_json(cost_to_json(Cost(q(-3, 4)))), Cost(q(-3, 4)));
  EXPECT_EQ(rational_from_json(rational_to_json(q(9, 6))), q(3, 2));
}

}  // namespace
}  // namespace ncg
