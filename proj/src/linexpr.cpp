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

#include "riordan/linexpr.hpp"

#include <sstream>

#include "riordan/error.hpp"

namespace riordan {

LinExpr::LinExpr(Rational constant, Terms terms)
    : constant_(std::move(constant)), terms_(std::move(terms)) {
  prune();
}

LinExpr LinExpr::unknown(const std::string& name, const Rational& coefficient) {
  return LinExpr(Rational(0), Terms{{name, coefficient}});
}

Rational LinExpr::coefficient(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> LinExpr::unknowns() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [name, k] : terms_) out.push_back(name);
  return out;
}

void LinExpr::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

LinExpr LinExpr::operator-() const {
  LinExpr out = *this;
  out *= Rational(-1);
  return out;
}

LinExpr& LinExpr::operator+=(const LinExpr& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [name, k] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(name, k);
    if (!inserted) {
      it->second += k;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& rhs) { return *this += -rhs; }

LinExpr& LinExpr::operator*=(const Rational& k) {
  if (k.is_zero()) {
    constant_ = Rational(0);
    terms_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& [name, c] : terms_) c *= k;
  return *this;
}

LinExpr& LinExpr::operator*=(const LinExpr& rhs) {
  if (rhs.is_constant()) return *this *= rhs.constant_;
  if (is_constant()) {
    const Rational k = constant_;
    *this = rhs;
    return *this *= k;
  }
  throw NonlinearError("(" + to_string() + ") * (" + rhs.to_string() + ")");
}

LinExpr& LinExpr::operator/=(const LinExpr& rhs) {
  if (!rhs.is_constant()) throw NonlinearError("division by non-constant " + rhs.to_string());
  if (rhs.constant_.is_zero()) throw DivisionByZero();
  return *this *= Rational(1) / rhs.constant_;
}

LinExpr LinExpr::substitute(const std::string& name, const LinExpr& value) const {
  auto it = terms_.find(name);
  if (it == terms_.end()) return *this;
  LinExpr out = *this;
  const Rational k = it->second;
  out.terms_.erase(name);
  LinExpr scaled = value;
  scaled *= k;
  out += scaled;
  return out;
}

LinExpr LinExpr::substitute(const std::map<std::string, LinExpr>& bindings) const {
  LinExpr out(constant_);
  for (const auto& [name, k] : terms_) {
    auto it = bindings.find(name);
    LinExpr part = it == bindings.end() ? unknown(name) : it->second;
    part *= k;
    out += part;
  }
  return out;
}

Rational LinExpr::evaluate(const std::map<std::string, Rational>& values) const {
  Rational out = constant_;
  for (const auto& [name, k] : terms_) {
    auto it = values.find(name);
    if (it == values.end()) throw MathError("no value for unknown '" + name + "'");
    out += k * it->second;
  }
  return out;
}

std::optional<LinExpr> LinExpr::solve_for(const std::string& name) const {
  const Rational k = coefficient(name);
  if (k.is_zero()) return std::nullopt;
  LinExpr rest = *this;
  rest.terms_.erase(name);
  rest *= Rational(-1) / k;
  return rest;
}

std::string LinExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (!constant_.is_zero() || terms_.empty()) {
    os << constant_;
    first = false;
  }
  for (const auto& [name, k] : terms_) {
    Rational mag = k.sign() < 0 ? -k : k;
    if (first) {
      if (k.sign() < 0) os << '-';
    } else {
      os << (k.sign() < 0 ? " - " : " + ");
    }
    if (!mag.is_one()) os << mag << '*';
    os << name;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LinExpr& e) { return os << e.to_string(); }

LinExpr unit_inverse(const LinExpr& e) {
  if (!e.is_constant()) throw NotAUnit("non-constant leading coefficient " + e.to_string());
  return LinExpr(unit_inverse(e.constant()));
}

}  // namespace riordan
