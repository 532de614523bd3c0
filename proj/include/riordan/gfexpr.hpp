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

// Generating-function expressions such as `(1-x^2-sqrt(1-6*x^2+x^4))/(2*x^2)`.
//
// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := '-' factor | power
//   power    := atom ('^' exponent)?
//   exponent := signed-int | '(' signed-int ('/' int)? ')'
//   atom     := number | 'x' | 'sqrt' '(' expr ')' | '(' expr ')'
//
// `^` binds tighter than unary minus, so `-x^2` is -(x^2). Exponents must
// reduce to a denominator of 1 or 2. There is no implicit multiplication and
// the only identifiers are `x` and `sqrt`.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan::gf {

enum class NodeKind { Number, X, Neg, Add, Sub, Mul, Div, Pow, Sqrt };

struct Node {
  NodeKind kind;
  Rational value;  // Number literal, or the exponent of Pow
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

using Ast = std::unique_ptr<Node>;

Ast parse(std::string_view text);

/// Fully parenthesised rendering, mostly for diagnostics and tests.
std::string to_string(const Node& node);

/// Evaluates to at least `prec` certified coefficients. Divisions by series
/// with positive valuation consume precision, so evaluation is retried with a
/// growing guard (at most 8 retries).
Series<Rational> evaluate(const Node& ast, std::size_t prec);

inline Series<Rational> evaluate(std::string_view text, std::size_t prec) { return evaluate(*parse(text), prec); }

/// Replaces each whole identifier that names a parameter by its parenthesised
/// value. `rx` is left untouched by a binding for `r`.
std::string substitute_params(std::string_view text, const std::map<std::string, Rational>& params);

}  // namespace riordan::gf
