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

#include "riordan/element_spec.hpp"

#include <stdexcept>

#include "riordan/gfexpr.hpp"

namespace riordan {

using nlohmann::json;

namespace {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("scalars must be strings or integers, got " + j.dump());
}

SeriesSource source_from_json(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) return series_from_json(j);
  throw std::invalid_argument(std::string("'") + what + "' must be an expression string or a coefficient object");
}

}  // namespace

Series<Rational> series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series object needs a \"coeffs\" array");
  }
  std::vector<Rational> v;
  for (const auto& c : j["coeffs"]) v.push_back(Rational::parse(scalar_text(c)));
  if (j.contains("prec") && j["prec"].get<std::size_t>() != v.size()) {
    throw std::invalid_argument("series \"prec\" must equal the number of coefficients");
  }
  if (v.empty()) throw std::invalid_argument("series object has no coefficients");
  return Series<Rational>(std::move(v));
}

ElementSpec element_spec_from_json(const json& doc) {
  const json& j = doc.contains("element") ? doc["element"] : doc;
  if (!j.is_object()) throw std::invalid_argument("element spec must be a JSON object");
  ElementSpec spec;
  const std::string type = j.value("type", std::string("riordan"));
  if (type == "almost") {
    spec.almost = true;
  } else if (type != "riordan") {
    throw std::invalid_argument("unknown element type '" + type + "'");
  }
  if (!j.contains("g") || !j.contains("f")) throw std::invalid_argument("element spec needs \"g\" and \"f\"");
  spec.g = source_from_json(j["g"], "g");
  spec.f = source_from_json(j["f"], "f");
  if (spec.almost) {
    if (!j.contains("prefix") || !j["prefix"].is_array()) {
      throw std::invalid_argument("almost element needs a \"prefix\" array");
    }
    for (const auto& p : j["prefix"]) spec.prefix.push_back(source_from_json(p, "prefix"));
    if (j.contains("order") && j["order"].get<std::size_t>() != spec.prefix.size()) {
      throw std::invalid_argument("\"order\" does not match the number of prefix series");
    }
  }
  if (j.contains("params")) {
    for (const auto& [name, value] : j["params"].items()) spec.params[name] = Rational::parse(scalar_text(value));
  }
  return spec;
}

std::pair<std::string, Rational> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw std::invalid_argument("parameter must look like name=value: " + text);
  const std::string name = text.substr(0, eq);
  if (name == "x" || name == "sqrt") throw std::invalid_argument("'" + name + "' cannot be a parameter");
  try {
    return {name, Rational::parse(text.substr(eq + 1))};
  } catch (const MathError& e) {
    throw std::invalid_argument(e.what());
  }
}

Series<Rational> build_series(const SeriesSource& source, std::size_t prec, const std::map<std::string, Rational>& params) {
  if (const auto* literal = std::get_if<Series<Rational>>(&source)) return *literal;
  return gf::evaluate(gf::substitute_params(std::get<std::string>(source), params), prec);
}

AlmostRiordan<Rational> build_element(const ElementSpec& spec, std::size_t prec,
                                      const std::map<std::string, Rational>& params) {
  std::map<std::string, Rational> bound = params;
  for (const auto& [k, v] : spec.params) bound[k] = v;
  std::vector<Series<Rational>> prefix;
  for (const auto& p : spec.prefix) prefix.push_back(build_series(p, prec, bound));
  return AlmostRiordan<Rational>(std::move(prefix), build_series(spec.g, prec, bound), build_series(spec.f, prec, bound));
}

json to_json(const Series<Rational>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return json{{"coeffs", coeffs}, {"prec", s.prec()}};
}

json to_json(const Series<LinExpr>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return json{{"coeffs", coeffs}, {"prec", s.prec()}};
}

json to_json(const TriMatrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const AlmostRiordan<Rational>& a) {
  json j;
  if (a.order() == 0) {
    j["type"] = "riordan";
  } else {
    j["type"] = "almost";
    j["order"] = a.order();
    json prefix = json::array();
    for (const auto& p : a.prefix()) prefix.push_back(to_json(p));
    j["prefix"] = prefix;
  }
  j["g"] = to_json(a.g());
  j["f"] = to_json(a.f());
  return j;
}

}  // namespace riordan
