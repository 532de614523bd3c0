// Copyright 2026 The riordan-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace riordan {

/// Exact rational number of arbitrary size, always in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value);

  /// Parses `p`, `-p` or `p/q`. Throws MathError on malformed text or q = 0.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> exact_sqrt() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// `p` when the denominator is 1, otherwise `p/q`.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }

/// Multiplicative inverse; throws NotAUnit for zero.
Rational unit_inverse(const Rational& r);

}  // namespace riordan
