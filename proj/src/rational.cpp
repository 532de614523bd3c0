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

#include "riordan/rational.hpp"

#include <cctype>

#include "riordan/error.hpp"

namespace riordan {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw MathError("malformed rational '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw DivisionByZero();
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(q);
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class n = value_.get_num();
  const mpz_class d = value_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  return Rational(mpq_class(rn, rd));
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational unit_inverse(const Rational& r) {
  if (r.is_zero()) throw NotAUnit("zero has no inverse");
  return Rational(1) / r;
}

}  // namespace riordan
