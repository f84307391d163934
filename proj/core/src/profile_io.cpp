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

#include "ncg/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ncg {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_index(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a node index, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

GameInstance parse_profile_text(std::string_view text) {
  std::optional<int> n;
  std::optional<Rational> alpha;
  std::optional<StrategyProfile> profile;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (!profile) {
      if (tokens.size() != 3 || tokens[0] != "ncg" || !tokens[1].starts_with("n=") ||
          !tokens[2].starts_with("alpha=")) {
        throw ParseError(line_no, "expected header 'ncg n=<int> alpha=<p>/<q>'");
      }
      n = parse_index(tokens[1].substr(2), line_no);
      try {
        alpha = parse_rational(tokens[2].substr(6));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (*n < 1 || *n > kMaxNodes) throw ParseError(line_no, "n must be in [1, 64]");
      if (*alpha < Rational(0)) throw ParseError(line_no, "alpha must be non-negative");
      profile.emplace(*n);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected '<buyer> <target>'");
    const int u = parse_index(tokens[0], line_no);
    const int v = parse_index(tokens[1], line_no);
    if (u < 0 || u >= *n || v < 0 || v >= *n) throw ParseError(line_no, "node index out of range");
    if (u == v) throw ParseError(line_no, "self-purchase " + std::to_string(u) + " -> " + std::to_string(v));
    if (profile->buys(u, v)) throw ParseError(line_no, "duplicate purchase");
    profile->add_purchase(u, v);
  }
  if (!profile) throw ParseError(0, "missing header line");
  return GameInstance{Game(*n, *alpha), *profile};
}

std::string format_profile_text(const Game& game, const StrategyProfile& profile) {
  std::ostringstream os;
  os << "ncg n=" << game.n() << " alpha=" << game.alpha().numerator() << "/"
     << game.alpha().denominator() << "\n";
  for (const auto& [u, v] : profile.purchase_list()) os << u << " " << v << "\n";
  return os.str();
}

GameInstance read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_profile_text(buf.str());
}

void write_profile_file(const std::string& path, const Game& game, const StrategyProfile& profile) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_profile_text(game, profile);
}

nlohmann::json rational_to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  const auto den = j.at("den").get<std::int64_t>();
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(j.at("num").get<std::int64_t>(), den);
}

nlohmann::json cost_to_json(const Cost& c) {
  switch (c.kind()) {
    case Cost::Kind::kPosInfinity: return {{"num", 1}, {"den", 0}};
    case Cost::Kind::kNegInfinity: return {{"num", -1}, {"den", 0}};
    case Cost::Kind::kFinite: break;
  }
  return rational_to_json(c.value());
}

Cost cost_from_json(const nlohmann::json& j) {
  if (j.at("den").get<std::int64_t>() == 0) {
    return j.at("num").get<std::int64_t>() < 0 ? Cost::neg_infinity() : Cost::infinity();
  }
  return Cost(rational_from_json(j));
}

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

nlohmann::json profile_to_json(const Game& game, const StrategyProfile& profile) {
  return {{"n", game.n()},
          {"alpha", rational_to_json(game.alpha())},
          {"purchases", edges_to_json(profile.purchase_list())}};
}

GameInstance profile_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  Game game(n, rational_from_json(j.at("alpha")));
  std::vector<Edge> purchases;
  for (const auto& p : j.at("purchases")) purchases.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return GameInstance{game, StrategyProfile::from_purchases(n, purchases)};
}

}  // namespace ncg
