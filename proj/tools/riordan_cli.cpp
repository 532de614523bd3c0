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

// riordan: build, multiply, invert and classify (almost-)Riordan arrays.
//
// Exit codes: 0 success, 1 usage error, 2 math error, 3 a checked property
// failed, 4 inconsistent synthesis system.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "riordan/almost.hpp"
#include "riordan/element_spec.hpp"
#include "riordan/error.hpp"
#include "riordan/gfexpr.hpp"
#include "riordan/involcheck.hpp"
#include "riordan/quasisynth.hpp"

namespace {

using nlohmann::json;
using namespace riordan;

constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitProperty = 3;
constexpr int kExitInconsistent = 4;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ElementFlags {
  std::string g;
  std::string f;
  std::vector<std::string> prefix;
  bool almost = false;
  int order = -1;
  std::vector<std::string> specs;
};

struct CommonFlags {
  std::size_t trunc = 16;
  std::string format = "pretty";
  std::vector<std::string> params;
  bool matrix = false;
};

std::string read_spec_text(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read spec file " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return text;
}

json parse_json_arg(const std::string& text) {
  try {
    return json::parse(read_spec_text(text));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON spec: ") + e.what());
  }
}

ElementSpec spec_from_json_arg(const std::string& text) {
  try {
    return element_spec_from_json(parse_json_arg(text));
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad element spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ElementSpec inline_spec(const ElementFlags& flags) {
  if (flags.g.empty() || flags.f.empty()) throw UsageError("an element needs --g and --f (or --spec)");
  ElementSpec spec;
  spec.g = flags.g;
  spec.f = flags.f;
  spec.almost = flags.almost || !flags.prefix.empty();
  for (const auto& p : flags.prefix) spec.prefix.push_back(p);
  if (flags.order >= 0 && static_cast<std::size_t>(flags.order) != spec.prefix.size()) {
    throw UsageError("--order " + std::to_string(flags.order) + " but " + std::to_string(spec.prefix.size()) +
                     " --prefix series given");
  }
  if (spec.almost && spec.prefix.empty()) throw UsageError("--almost needs at least one --prefix");
  return spec;
}

std::vector<ElementSpec> collect_specs(const ElementFlags& flags) {
  std::vector<ElementSpec> out;
  for (const auto& s : flags.specs) out.push_back(spec_from_json_arg(s));
  if (!flags.g.empty() || !flags.f.empty() || !flags.prefix.empty()) out.push_back(inline_spec(flags));
  return out;
}

std::map<std::string, Rational> collect_params(const CommonFlags& common) {
  std::map<std::string, Rational> out;
  for (const auto& p : common.params) {
    try {
      auto [name, value] = parse_param(p);
      out.insert_or_assign(name, value);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

AlmostRiordan<Rational> single_element(const ElementFlags& flags, const CommonFlags& common) {
  const auto specs = collect_specs(flags);
  if (specs.size() != 1) throw UsageError("expected exactly one element, got " + std::to_string(specs.size()));
  auto a = build_element(specs.front(), common.trunc, collect_params(common));
  for (const auto& w : a.warnings()) std::cerr << "warning: " << w << '\n';
  return a;
}

void add_element_flags(CLI::App* cmd, ElementFlags& flags, CommonFlags& common) {
  cmd->add_option("--g", flags.g, "generating function g(x)");
  cmd->add_option("--f", flags.f, "generating function f(x)");
  cmd->add_option("--prefix", flags.prefix, "prefix series a_k(x) of an almost-Riordan array (repeatable)");
  cmd->add_flag("--almost", flags.almost, "treat the element as an almost-Riordan array");
  cmd->add_option("--order", flags.order, "expected number of prefix series");
  cmd->add_option("--spec", flags.specs, "JSON element spec, or @file");
  cmd->add_option("--param", common.params, "name=value substituted into expressions (repeatable)");
}

void add_common_flags(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--trunc", common.trunc, "truncation order N")->envname("RIORDAN_TRUNC")->check(CLI::Range(2, 4096));
  cmd->add_option("--format", common.format, "pretty, csv or json")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
}

void print_element(const AlmostRiordan<Rational>& a, const CommonFlags& common) {
  if (common.format == "json") {
    json out{{"element", to_json(a)}};
    if (common.matrix) {
      out["dimension"] = common.trunc;
      out["matrix"] = to_json(almost_to_matrix(a, common.trunc));
    }
    std::cout << out.dump() << '\n';
    return;
  }
  if (common.format == "csv") {
    auto row = [](const std::string& name, const Series<Rational>& s) {
      std::cout << name;
      for (const auto& c : s.coeffs()) std::cout << ',' << c;
      std::cout << '\n';
    };
    for (std::size_t k = 0; k < a.order(); ++k) row("prefix" + std::to_string(k), a.prefix(k));
    row("g", a.g());
    row("f", a.f());
    if (common.matrix) std::cout << almost_to_matrix(a, common.trunc).to_csv();
    return;
  }
  if (a.order() == 0) {
    std::cout << "type: riordan\n";
  } else {
    std::cout << "type: almost (order " << a.order() << ")\n";
  }
  for (std::size_t k = 0; k < a.order(); ++k) std::cout << "prefix[" << k << "]: " << a.prefix(k) << '\n';
  std::cout << "g: " << a.g() << '\n';
  std::cout << "f: " << a.f() << '\n';
  if (common.matrix) std::cout << '\n' << almost_to_matrix(a, common.trunc).to_string();
}

int cmd_show(const ElementFlags& flags, const CommonFlags& common) {
  const auto a = single_element(flags, common);
  const auto m = almost_to_matrix(a, common.trunc);
  if (common.format == "json") {
    std::cout << json{{"element", to_json(a)}, {"dimension", common.trunc}, {"matrix", to_json(m)}}.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << m.to_csv();
  } else {
    std::cout << m.to_string();
  }
  return 0;
}

int cmd_mul(const ElementFlags& flags, const CommonFlags& common) {
  const auto specs = collect_specs(flags);
  if (specs.size() < 2) throw UsageError("mul needs at least two elements (repeat --spec)");
  const auto params = collect_params(common);
  auto acc = build_element(specs.front(), common.trunc, params);
  for (std::size_t i = 1; i < specs.size(); ++i) acc = almost_mul(acc, build_element(specs[i], common.trunc, params));
  print_element(acc, common);
  return 0;
}

int cmd_inv(const ElementFlags& flags, const CommonFlags& common) {
  print_element(almost_inverse(single_element(flags, common)), common);
  return 0;
}

int cmd_pow(const ElementFlags& flags, const CommonFlags& common, long power) {
  print_element(almost_pow(single_element(flags, common), power), common);
  return 0;
}

int cmd_apply(const ElementFlags& flags, const CommonFlags& common, const std::string& h) {
  if (h.empty()) throw UsageError("apply needs --series");
  const auto a = single_element(flags, common);
  const auto series = gf::evaluate(gf::substitute_params(h, collect_params(common)), common.trunc);
  const auto out = almost_apply(a, series);
  if (common.format == "json") {
    std::cout << to_json(out).dump() << '\n';
  } else if (common.format == "csv") {
    for (std::size_t i = 0; i < out.prec(); ++i) std::cout << (i ? "," : "") << out[i];
    std::cout << '\n';
  } else {
    std::cout << out << '\n';
  }
  return 0;
}

json report_json(const ClassReport& r) {
  json j{{"kind", to_string(r.tested)}, {"passed", r.passed()}, {"dimension", r.dimension}};
  if (r.witness) {
    j["witness"] = {{"row", r.witness->row},
                    {"col", r.witness->col},
                    {"expected", r.witness->expected.to_string()},
                    {"found", r.witness->found.to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

int cmd_check(const ElementFlags& flags, const CommonFlags& common, const std::string& kind) {
  const auto m = almost_to_matrix(single_element(flags, common), common.trunc);
  struct Line {
    std::string label;
    std::optional<ClassReport> report;
    std::string error;
  };
  std::vector<Line> lines;
  if (kind == "all") {
    auto inv = std::async(std::launch::async, [&] { return check_involution(m); });
    auto pseudo = std::async(std::launch::async, [&] { return check_pseudo_involution(m); });
    auto quasi = std::async(std::launch::async, [&] { return check_quasi_involution(m); });
    lines.push_back({"involution", inv.get(), {}});
    lines.push_back({"pseudo", pseudo.get(), {}});
    try {
      lines.push_back({"quasi", quasi.get(), {}});
    } catch (const MathError& e) {
      lines.push_back({"quasi", std::nullopt, e.what()});
    }
  } else if (kind == "involution") {
    lines.push_back({"involution", check_involution(m), {}});
  } else if (kind == "pseudo") {
    lines.push_back({"pseudo", check_pseudo_involution(m), {}});
  } else {
    lines.push_back({"quasi", check_quasi_involution(m), {}});
  }

  bool ok = true;
  json results = json::array();
  for (const auto& l : lines) {
    ok = ok && l.report && l.report->passed();
    if (common.format == "json") {
      if (l.report) {
        results.push_back(report_json(*l.report));
      } else {
        results.push_back({{"kind", "quasi_involution"}, {"passed", false}, {"precondition", l.error}});
      }
    } else if (l.report) {
      std::cout << l.label << ": " << l.report->summary() << '\n';
    } else {
      std::cout << l.label << ": FAIL (precondition): " << l.error << '\n';
    }
  }
  if (common.format == "json") std::cout << json{{"dimension", common.trunc}, {"results", results}}.dump() << '\n';
  return ok ? 0 : kExitProperty;
}

// "g,f" split at the top-level comma, optionally wrapped in parentheses.
std::pair<std::string, std::string> split_pair(std::string text) {
  for (int pass = 0; pass < 2; ++pass) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] == ',' && depth == 0) return {text.substr(0, i), text.substr(i + 1)};
    }
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos || text[first] != '(' || text[last] != ')') break;
    text = text.substr(first + 1, last - first - 1);
  }
  throw UsageError("--interior must be a JSON spec or a pair 'g,f'");
}

Assignment parse_seed(const std::string& text, const std::vector<std::string>& free_names) {
  Assignment out;
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
  const bool named = !items.empty() && items.front().find('=') != std::string::npos;
  if (named) {
    for (const auto& item : items) {
      try {
        auto [name, value] = parse_param(item);
        out[name] = value;
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    return out;
  }
  if (items.size() != free_names.size()) {
    throw UsageError("seed has " + std::to_string(items.size()) + " values but there are " +
                     std::to_string(free_names.size()) + " free unknowns");
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out[free_names[i]] = Rational::parse(items[i]);
    } catch (const MathError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int cmd_synth(const std::string& interior_text, bool extract, bool precheck, const CommonFlags& common,
              const std::string& seed_text, const std::string& report) {
  if (interior_text.empty()) throw UsageError("synth needs --interior");
  ElementSpec spec;
  const auto first = interior_text.find_first_not_of(" \t");
  if (first != std::string::npos && (interior_text[first] == '{' || interior_text[first] == '@')) {
    spec = spec_from_json_arg(interior_text);
  } else {
    auto [g, f] = split_pair(interior_text);
    spec.g = g;
    spec.f = f;
  }
  if (spec.almost) throw UsageError("the interior must be a Riordan array");
  // interior_of divides by x, so the source array needs one extra coefficient
  const std::size_t prec = extract ? common.trunc + 1 : common.trunc;
  RiordanArray<Rational> interior = build_element(spec, prec, collect_params(common)).interior();
  if (extract) interior = interior_of(interior);

  SynthResult result = synth_column(interior, common.trunc, std::nullopt, precheck);
  std::optional<Assignment> seed;
  std::optional<ClassReport> verdict;
  if (!seed_text.empty()) {
    seed = parse_seed(seed_text, result.free_names);
    try {
      result.concrete = result.concretize(*seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    result.assignment = seed;
    verdict = verify_synth(interior, result, *seed, common.trunc);
  }

  const bool show_relations = report == "relations" || report == "both";
  const bool show_column = report == "column" || report == "both";
  if (common.format == "json") {
    json out{{"dimension", result.dimension}, {"free", result.free_names}};
    if (show_relations) {
      json rel = json::object();
      for (const auto& [pos, e] : result.relations) rel[unknown_name(pos)] = e.to_string();
      out["relations"] = rel;
    }
    if (show_column) {
      out["column"] = to_json(result.column);
      if (result.concrete) out["concrete"] = to_json(*result.concrete);
    }
    if (verdict) out["verify"] = report_json(*verdict);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "dimension: " << result.dimension << '\n';
    std::cout << "free:";
    for (const auto& n : result.free_names) std::cout << ' ' << n;
    std::cout << '\n';
    if (show_relations) {
      std::cout << "relations:\n";
      for (const auto& [pos, e] : result.relations) std::cout << "  " << unknown_name(pos) << " = " << e << '\n';
    }
    if (show_column) {
      std::cout << "column: " << result.column << '\n';
      if (result.concrete) std::cout << "concrete: " << *result.concrete << '\n';
    }
    if (verdict) std::cout << "verify: " << verdict->summary() << '\n';
  }
  return verdict && !verdict->passed() ? kExitProperty : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan and almost-Riordan array toolkit"};
  app.require_subcommand(1);

  ElementFlags flags;
  CommonFlags common;
  long power = 1;
  std::string h;
  std::string kind = "all";
  std::string interior;
  bool extract = false;
  bool skip_precheck = false;
  std::string seed;
  std::string report = "both";

  auto* show = app.add_subcommand("show", "print the matrix of an element");
  auto* mul = app.add_subcommand("mul", "multiply elements left to right");
  auto* inv = app.add_subcommand("inv", "invert an element");
  auto* pow = app.add_subcommand("pow", "integer power of an element");
  auto* apply = app.add_subcommand("apply", "act on a series by the fundamental theorem");
  auto* check = app.add_subcommand("check", "classify the N x N truncation");
  auto* synth = app.add_subcommand("synth", "synthesise quasi-involution initial columns");

  for (auto* cmd : {show, mul, inv, pow, apply, check}) {
    add_element_flags(cmd, flags, common);
    add_common_flags(cmd, common);
  }
  for (auto* cmd : {mul, inv, pow}) cmd->add_flag("--matrix", common.matrix, "also print the N x N matrix");
  pow->add_option("-p,--power", power, "exponent (may be negative)")->required();
  apply->add_option("--series", h, "series h(x) to act on")->required();
  check->add_option("--kind", kind, "all, involution, pseudo or quasi")
      ->check(CLI::IsMember({"all", "involution", "pseudo", "quasi"}));

  add_common_flags(synth, common);
  synth->add_option("--interior", interior, "interior Riordan array: JSON spec, @file or 'g,f'")->required();
  synth->add_flag("--extract", extract, "treat --interior as the full array (g, f) and use (g f / x, f)");
  synth->add_flag("--no-precheck", skip_precheck, "skip the interior classification; failures show up as inconsistent equations");
  synth->add_option("--seed", seed, "free values: 'v1,v2,...' in position order or 'u2=..,u6=..'");
  synth->add_option("--report", report, "relations, column or both")
      ->check(CLI::IsMember({"relations", "column", "both"}));
  synth->add_option("--param", common.params, "name=value substituted into expressions (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*show) return cmd_show(flags, common);
    if (*mul) return cmd_mul(flags, common);
    if (*inv) return cmd_inv(flags, common);
    if (*pow) return cmd_pow(flags, common, power);
    if (*apply) return cmd_apply(flags, common, h);
    if (*check) return cmd_check(flags, common, kind);
    if (*synth) return cmd_synth(interior, extract, !skip_precheck, common, seed, report);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistentSystem& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitUsage;
}
