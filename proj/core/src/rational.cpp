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

#include "ncg/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace ncg {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not an exact rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

const Rational& Cost::value() const {
  if (kind_ != Kind::kFinite) throw std::logic_error("value() on an infinite cost");
  return value_;
}

Cost operator+(const Cost& a, const Cost& b) {
  using K = Cost::Kind;
  if (a.kind_ == K::kFinite && b.kind_ == K::kFinite) return Cost(a.value_ + b.value_);
  if ((a.kind_ == K::kPosInfinity && b.kind_ == K::kNegInfinity) ||
      (a.kind_ == K::kNegInfinity && b.kind_ == K::kPosInfinity)) {
    throw std::logic_error("inf + -inf is undefined");
  }
  return Cost(a.kind_ != K::kFinite ? a.kind_ : b.kind_);
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Cost::Kind::kFinite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Cost cost_change(const Cost& before, const Cost& after) {
  if (before.is_infinite() && after.kind() == before.kind()) return Cost(0);
  return after + (-before);
}

Cost divide(const Cost& numerator, const Rational& denominator) {
  if (numerator.is_infinite()) return numerator;
  if (denominator == Rational(0)) return numerator.value() == Rational(0) ? Cost(1) : Cost::infinity();
  return Cost(numerator.value() / denominator);
}

std::string to_string(const Cost& c) {
  switch (c.kind()) {
    case Cost::Kind::kNegInfinity: return "-inf";
    case Cost::Kind::kPosInfinity: return "inf";
    case Cost::Kind::kFinite: break;
  }
  return to_string(c.value());
}

}  // namespace ncg
