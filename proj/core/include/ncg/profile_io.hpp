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

#ifndef NCG_PROFILE_IO_HPP_
#define NCG_PROFILE_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ncg/game.hpp"

namespace ncg {

/// Malformed profile input; `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// A game together with one profile, as stored in a profile file.
struct GameInstance {
  Game game;
  StrategyProfile profile;
};

// Text format:
//   ncg n=<int> alpha=<p>/<q>
//   <buyer> <target>        one purchase per line, 0-indexed
//   # comment               anywhere, also trailing
GameInstance parse_profile_text(std::string_view text);
std::string format_profile_text(const Game& game, const StrategyProfile& profile);

GameInstance read_profile_file(const std::string& path);
void write_profile_file(const std::string& path, const Game& game, const StrategyProfile& profile);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"num", "den"}; infinities use den 0 and num +1 or -1.
nlohmann::json cost_to_json(const Cost& c);
Cost cost_from_json(const nlohmann::json& j);

/// {n, alpha:{num,den}, purchases:[[u,v],...]}.
nlohmann::json profile_to_json(const Game& game, const StrategyProfile& profile);
GameInstance profile_from_json(const nlohmann::json& j);

nlohmann::json edges_to_json(const std::vector<Edge>& edges);

}  // namespace ncg

#endif  // NCG_PROFILE_IO_HPP_
