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

#include "riordan/quasisynth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "riordan/almost.hpp"

namespace riordan {

std::string unknown_name(std::size_t position) { return "u" + std::to_string(position); }

RiordanArray<Rational> interior_of(const RiordanArray<Rational>& q) {
  return RiordanArray<Rational>(shift_div(q.g() * q.f(), 1), q.f());
}

std::vector<std::size_t> SynthResult::free_positions() const {
  std::vector<std::size_t> out;
  for (const auto& name : free_names) out.push_back(std::stoul(name.substr(1)));
  return out;
}

Series<Rational> SynthResult::concretize(const Assignment& values) const {
  const std::set<std::string> free(free_names.begin(), free_names.end());
  for (const auto& [name, v] : values) {
    if (!free.contains(name)) throw std::invalid_argument("'" + name + "' is not a free unknown");
  }
  for (const auto& name : free_names) {
    if (!values.contains(name)) throw std::invalid_argument("no value given for free unknown '" + name + "'");
  }
  std::vector<Rational> v;
  v.reserve(column.prec());
  for (const auto& c : column.coeffs()) v.push_back(c.evaluate(values));
  return Series<Rational>(std::move(v));
}

SynthResult synth_column(const RiordanArray<Rational>& interior, std::size_t n, const std::optional<Assignment>& seed,
                         bool precheck) {
  if (n < 2) throw PrecisionError("synthesis needs a truncation of at least 2");
  if (precheck) {
    const ClassReport pre = check_quasi_involution(riordan_to_matrix(interior, n));
    if (!pre.passed()) {
      throw MathError("interior is not a quasi-involution at N=" + std::to_string(n) + ": " + pre.summary());
    }
  }

  // a* = (1; -1/G(Fbar), Fbar) a, evaluated once with every unknown symbolic.
  const Series<Rational> fbar = comp_inverse(interior.f().truncate(n));
  const Series<Rational> g_inv = mul_invert(compose(interior.g().truncate(n), fbar));
  const AlmostRiordan<LinExpr> act({Series<LinExpr>::one(n)}, series_cast<LinExpr>(-g_inv),
                                   series_cast<LinExpr>(fbar));
  std::vector<LinExpr> unknowns(n, LinExpr(0));
  unknowns[0] = LinExpr(1);
  for (std::size_t k = 2; k < n; k += 2) unknowns[k] = LinExpr::unknown(unknown_name(k));
  const Series<LinExpr> astar = almost_apply(act, Series<LinExpr>(unknowns));

  SynthResult result;
  result.dimension = n;
  std::map<std::string, LinExpr> bindings;
  for (std::size_t k = 1; k < n; ++k) {
    LinExpr eq = astar[k].substitute(bindings);
    if (k % 2 == 1) {
      if (!eq.is_zero()) throw InconsistentSystem("[x^" + std::to_string(k) + "] a* = " + eq.to_string());
      continue;
    }
    const std::string name = unknown_name(k);
    const LinExpr own = unknowns[k];
    eq -= (k / 2) % 2 == 0 ? own : -own;
    if (auto solved = eq.solve_for(name)) {
      bindings.emplace(name, *solved);
      result.relations.emplace(k, *solved);
    } else if (eq.is_zero()) {
      result.free_names.push_back(name);
    } else {
      throw InconsistentSystem("E_" + std::to_string(k) + ": " + eq.to_string());
    }
  }

  std::vector<LinExpr> column;
  column.reserve(n);
  for (const auto& u : unknowns) column.push_back(u.substitute(bindings));
  result.column = Series<LinExpr>(std::move(column));

  if (seed) {
    result.concrete = result.concretize(*seed);
    result.assignment = seed;
  }
  return result;
}

ClassReport verify_synth(const RiordanArray<Rational>& interior, const SynthResult& result, const Assignment& seed,
                         std::size_t n) {
  const Series<Rational> column = result.concretize(seed);
  const AlmostRiordan<Rational> arr({column}, interior.g(), interior.f());
  return check_quasi_involution(almost_to_matrix(arr, n));
}

}  // namespace riordan
