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

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Affine expression c + k1*u1 + k2*u2 + ... over named unknowns with exact
/// rational coefficients. Terms never carry a zero coefficient, and the map
/// keeps names in lexicographic order so rendering is deterministic.
class LinExpr {
 public:
  using Terms = std::map<std::string, Rational>;

  LinExpr() = default;
  LinExpr(long constant) : constant_(constant) {}  // NOLINT(google-explicit-constructor)
  LinExpr(Rational constant) : constant_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)
  LinExpr(Rational constant, Terms terms);

  static LinExpr unknown(const std::string& name, const Rational& coefficient = Rational(1));

  const Rational& constant() const { return constant_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const std::string& name) const;

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
  std::vector<std::string> unknowns() const;

  LinExpr operator-() const;
  LinExpr& operator+=(const LinExpr& rhs);
  LinExpr& operator-=(const LinExpr& rhs);
  LinExpr& operator*=(const Rational& k);
  /// Product stays affine only if one side is constant; throws NonlinearError otherwise.
  LinExpr& operator*=(const LinExpr& rhs);
  /// Division by a nonzero constant.
  LinExpr& operator/=(const LinExpr& rhs);

  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const LinExpr& b) { return a *= b; }
  friend LinExpr operator/(LinExpr a, const LinExpr& b) { return a /= b; }

  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  /// Replaces `name` by `value` everywhere.
  LinExpr substitute(const std::string& name, const LinExpr& value) const;
  /// Replaces every unknown that has a binding; unbound unknowns remain.
  LinExpr substitute(const std::map<std::string, LinExpr>& bindings) const;
  /// Full evaluation; throws MathError if an unknown has no value.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// For the equation `*this = 0`, returns e with `name := e` solving it.
  /// nullopt when the coefficient of `name` is zero (the unknown is either
  /// free or the equation is inconsistent; the caller decides).
  std::optional<LinExpr> solve_for(const std::string& name) const;

  /// `c + k1*a - k2*b`, constant omitted when zero and terms present.
  std::string to_string() const;

 private:
  void prune();

  Rational constant_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LinExpr& e);

inline bool is_zero(const LinExpr& e) { return e.is_zero(); }
inline std::string to_string(const LinExpr& e) { return e.to_string(); }

/// Inverse of a nonzero constant expression.
LinExpr unit_inverse(const LinExpr& e);

}  // namespace riordan
