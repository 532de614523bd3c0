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

// Textual element descriptions and the JSON shapes used by the CLI.
//
//   {"type":"riordan","g":"<expr>","f":"<expr>"}
//   {"type":"almost","order":m,"prefix":["<expr>",...],"g":"<expr>","f":"<expr>"}
//
// Any series slot may instead hold a coefficient literal
// {"coeffs":["1","0","2"],"prec":3}; an optional "params" object binds
// named rationals that are substituted into the expressions before parsing.
// Scalars are always JSON strings so nothing is lost to floating point.

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "riordan/almost.hpp"
#include "riordan/linexpr.hpp"
#include "riordan/rational.hpp"
#include "riordan/trimatrix.hpp"

namespace riordan {

using SeriesSource = std::variant<std::string, Series<Rational>>;

struct ElementSpec {
  bool almost = false;
  std::vector<SeriesSource> prefix;
  SeriesSource g = std::string("1");
  SeriesSource f = std::string("x");
  std::map<std::string, Rational> params;
};

/// Accepts an element object, or a `show --format json` document (its
/// "element" member is used).
ElementSpec element_spec_from_json(const nlohmann::json& j);

/// `name=value` -> binding; throws std::invalid_argument on malformed text.
std::pair<std::string, Rational> parse_param(const std::string& text);

/// Evaluates every series slot to `prec` coefficients. `params` are applied
/// first and the spec's own "params" override them.
AlmostRiordan<Rational> build_element(const ElementSpec& spec, std::size_t prec,
                                      const std::map<std::string, Rational>& params = {});

Series<Rational> build_series(const SeriesSource& source, std::size_t prec,
                              const std::map<std::string, Rational>& params = {});

nlohmann::json to_json(const Series<Rational>& s);
nlohmann::json to_json(const Series<LinExpr>& s);
nlohmann::json to_json(const TriMatrix<Rational>& m);
/// Coefficient-literal element spec; type "riordan" for order 0.
nlohmann::json to_json(const AlmostRiordan<Rational>& a);

Series<Rational> series_from_json(const nlohmann::json& j);

}  // namespace riordan
