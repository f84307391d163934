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

#ifndef NCG_RATIONAL_HPP_
#define NCG_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ncg {

/// Exact rational used for link prices, costs and ratios.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or an integer. Decimal notation is rejected so that every
/// value entering the game is exact. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

/// A rational extended with +infinity and -infinity.
///
/// Player costs are +infinity when some node is unreachable; cost deltas may
/// be -infinity when a deviation reconnects a player. Ordering places
/// -infinity below and +infinity above every finite value.
class Cost {
 public:
  enum class Kind : std::uint8_t { kNegInfinity, kFinite, kPosInfinity };

  Cost() = default;
  Cost(const Rational& value) : value_(value) {}  // NOLINT(implicit)
  Cost(std::int64_t value) : value_(value) {}      // NOLINT(implicit)

  static Cost infinity() { return Cost(Kind::kPosInfinity); }
  static Cost neg_infinity() { return Cost(Kind::kNegInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinite() const { return kind_ != Kind::kFinite; }

  /// Finite value; throws std::logic_error on an infinite cost.
  const Rational& value() const;

  friend Cost operator+(const Cost& a, const Cost& b);
  friend Cost operator-(const Cost& a) {
    switch (a.kind_) {
      case Kind::kNegInfinity: return infinity();
      case Kind::kPosInfinity: return neg_infinity();
      case Kind::kFinite: break;
    }
    return Cost(-a.value_);
  }
  Cost& operator+=(const Cost& other) { return *this = *this + other; }

  friend bool operator==(const Cost& a, const Cost& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  explicit Cost(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_{0};
};

/// after - before, where two equal infinities give zero: a player that stays
/// cut off neither gains nor loses.
Cost cost_change(const Cost& before, const Cost& after);

/// Exact quotient of two costs. Finite / 0 and inf / finite give +infinity.
Cost divide(const Cost& numerator, const Rational& denominator);

/// "inf", "-inf", or the rational form.
std::string to_string(const Cost& c);

}  // namespace ncg

#endif  // NCG_RATIONAL_HPP_
