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

#include "riordan/gfexpr.hpp"

#include <cctype>
#include <optional>

#include "riordan/error.hpp"

namespace riordan::gf {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

Ast make(NodeKind kind, Ast lhs = nullptr, Ast rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ast parse() {
    Ast e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  Ast expr() {
    Ast lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(NodeKind::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = make(NodeKind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Ast term() {
    Ast lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = make(NodeKind::Mul, std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = make(NodeKind::Div, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Ast factor() {
    if (accept('-')) return make(NodeKind::Neg, factor());
    return power();
  }

  Ast power() {
    Ast base = atom();
    if (!accept('^')) return base;
    Ast p = make(NodeKind::Pow, std::move(base));
    p->value = exponent();
    return p;
  }

  mpz_class signed_int() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("exponent must be an integer or a parenthesised fraction with denominator 1 or 2");
    }
    mpz_class v(std::string(text_.substr(digits, pos_ - digits)), 10);
    return negative ? mpz_class(-v) : v;
  }

  Rational exponent() {
    skip_ws();
    const std::size_t start = pos_;
    Rational e;
    if (accept('(')) {
      const mpz_class num = signed_int();
      mpz_class den = 1;
      if (accept('/')) den = signed_int();
      expect(')');
      if (den == 0) {
        pos_ = start;
        fail("zero denominator in exponent");
      }
      e = Rational(mpq_class(num, den));
    } else {
      e = Rational(signed_int());
    }
    if (e.denominator() > 2) {
      pos_ = start;
      fail("exponent " + e.to_string() + " must have denominator 1 or 2");
    }
    return e;
  }

  Ast atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      Ast n = make(NodeKind::Number);
      n->value = Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
      return n;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string_view id = text_.substr(start, pos_ - start);
      if (id == "x") return make(NodeKind::X);
      if (id == "sqrt") {
        expect('(');
        Ast inner = expr();
        expect(')');
        return make(NodeKind::Sqrt, std::move(inner));
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    if (accept('(')) {
      Ast inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// u^e for a half-integer e, after pulling out the leading monomial c*x^v.
Series<Rational> half_power(const Series<Rational>& u, const Rational& e) {
  const std::size_t v = u.valuation();
  if (v >= u.prec()) throw PrecisionError("base of a fractional power vanishes to its precision");
  if (v % 2 != 0) throw MathError("fractional power of a series with odd valuation");
  const Rational c = u[v];
  const auto root = c.exact_sqrt();
  if (!root) throw MathError("leading coefficient " + c.to_string() + " is not a perfect square");
  const long n = e.numerator().get_si();  // e = n/2
  const long shift = static_cast<long>(v / 2) * n;
  if (shift < 0) throw MathError("pole at x=0");
  const Series<Rational> unit = unit_inverse(c) * shift_div(u, v);
  Series<Rational> w = pow_int(sqrt_series(unit), n);
  w = pow_int(Series<Rational>::constant(*root, w.prec()), n) * w;
  return w.mul_xpow(static_cast<std::size_t>(shift));
}

Series<Rational> eval(const Node& node, std::size_t prec) {
  switch (node.kind) {
    case NodeKind::Number:
      return Series<Rational>::constant(node.value, prec);
    case NodeKind::X:
      return Series<Rational>::x(prec);
    case NodeKind::Neg:
      return -eval(*node.lhs, prec);
    case NodeKind::Add:
      return eval(*node.lhs, prec) + eval(*node.rhs, prec);
    case NodeKind::Sub:
      return eval(*node.lhs, prec) - eval(*node.rhs, prec);
    case NodeKind::Mul:
      return eval(*node.lhs, prec) * eval(*node.rhs, prec);
    case NodeKind::Div:
      return divide(eval(*node.lhs, prec), eval(*node.rhs, prec));
    case NodeKind::Sqrt:
      return half_power(eval(*node.lhs, prec), Rational(1, 2));
    case NodeKind::Pow: {
      const Series<Rational> base = eval(*node.lhs, prec);
      const Rational& e = node.value;
      if (!e.is_integer()) return half_power(base, e);
      const long n = e.numerator().get_si();
      if (n >= 0) return pow_int(base, n);
      return divide(Series<Rational>::one(base.prec()), pow_int(base, -n));
    }
  }
  throw MathError("corrupt expression tree");
}

}  // namespace

Ast parse(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Node& node) {
  switch (node.kind) {
    case NodeKind::Number:
      return node.value.to_string();
    case NodeKind::X:
      return "x";
    case NodeKind::Neg:
      return "(-" + to_string(*node.lhs) + ")";
    case NodeKind::Add:
      return "(" + to_string(*node.lhs) + " + " + to_string(*node.rhs) + ")";
    case NodeKind::Sub:
      return "(" + to_string(*node.lhs) + " - " + to_string(*node.rhs) + ")";
    case NodeKind::Mul:
      return "(" + to_string(*node.lhs) + " * " + to_string(*node.rhs) + ")";
    case NodeKind::Div:
      return "(" + to_string(*node.lhs) + " / " + to_string(*node.rhs) + ")";
    case NodeKind::Pow:
    {
      const bool plain = node.value.is_integer() && node.value.sign() >= 0;
      const std::string e = plain ? node.value.to_string() : "(" + node.value.to_string() + ")";
      return "(" + to_string(*node.lhs) + " ^ " + e + ")";
    }
    case NodeKind::Sqrt:
      return "sqrt(" + to_string(*node.lhs) + ")";
  }
  return "?";
}

Series<Rational> evaluate(const Node& ast, std::size_t prec) {
  if (prec == 0) throw PrecisionError("requested precision must be at least 1");
  constexpr int kMaxRetries = 8;
  std::size_t guard = 0;
  std::string last;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    try {
      Series<Rational> s = eval(ast, prec + guard);
      if (s.prec() >= prec) return s.truncate(prec);
      last = "certified " + std::to_string(s.prec()) + " of " + std::to_string(prec) + " coefficients";
    } catch (const PrecisionError& e) {
      last = e.what();
    }
    guard = guard == 0 ? 2 : guard * 2;
  }
  throw PrecisionError("evaluation did not reach precision " + std::to_string(prec) + " after " +
                       std::to_string(kMaxRetries) + " retries (" + last + ")");
}

std::string substitute_params(std::string_view text, const std::map<std::string, Rational>& params) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      const std::string id(text.substr(i, j - i));
      auto it = params.find(id);
      if (it != params.end()) {
        out += "(" + it->second.to_string() + ")";
      } else {
        out += id;
      }
      i = j;
    } else if (is_digit(text[i])) {
      // Keep digit runs whole so `2r` never parses as a substituted tail.
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      out += text.substr(i, j - i);
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

}  // namespace riordan::gf
