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

// Initial-column synthesis for quasi-involutions.
//
// Given an aerated Riordan quasi-involution (G, F) used as the interior of an
// order-1 almost-Riordan array (a; G, F), find every aerated column
// a = 1 + a_2 x^2 + a_4 x^4 + ... for which the whole array is a
// quasi-involution. Each even position gets an unknown `u<n>`; the
// constraints [x^n] a* = (-1)^(n/2) a_n are processed in increasing n and
// either determine u_n from earlier unknowns or leave it free.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riordan/involcheck.hpp"
#include "riordan/linexpr.hpp"
#include "riordan/riordan.hpp"

namespace riordan {

using Assignment = std::map<std::string, Rational>;

/// Name of the unknown at column position n: `u<n>`.
std::string unknown_name(std::size_t position);

/// Interior (g f / x, f) of a Riordan array (g, f): adjoining column g to it
/// reproduces (g, f). For f = x g this is (g^2, x g).
RiordanArray<Rational> interior_of(const RiordanArray<Rational>& q);

struct SynthResult {
  std::size_t dimension = 0;
  Series<LinExpr> column{std::vector<LinExpr>{LinExpr(1)}};  // affine in the free unknowns
  std::vector<std::string> free_names;                        // in position order
  std::map<std::size_t, LinExpr> relations;                   // determined positions
  std::optional<Assignment> assignment;
  std::optional<Series<Rational>> concrete;  // set when an assignment was given

  std::vector<std::size_t> free_positions() const;
  /// Column with every free unknown replaced; throws std::invalid_argument
  /// when the assignment misses a free name or names an unknown that is not free.
  Series<Rational> concretize(const Assignment& values) const;
};

/// Throws MathError when the interior is not a quasi-involution at `n` and
/// InconsistentSystem when a constraint cannot be met. With `precheck` off the
/// interior is not classified first, so a bad interior surfaces as an
/// inconsistent equation instead.
SynthResult synth_column(const RiordanArray<Rational>& interior, std::size_t n,
                         const std::optional<Assignment>& seed = std::nullopt, bool precheck = true);

/// Builds (column; G, F) under `seed` and checks it at dimension `n`.
ClassReport verify_synth(const RiordanArray<Rational>& interior, const SynthResult& result, const Assignment& seed,
                         std::size_t n);

}  // namespace riordan
