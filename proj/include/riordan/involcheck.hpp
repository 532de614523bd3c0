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

// Involution, pseudo-involution and quasi-involution predicates on finite
// truncations, plus constructors for the standard families.
//
// Every predicate is a statement about the N x N truncation it is given and
// reports that N; nothing here claims anything about the infinite array.

#include <cstddef>
#include <optional>
#include <string>

#include "riordan/almost.hpp"
#include "riordan/rational.hpp"
#include "riordan/riordan.hpp"
#include "riordan/trimatrix.hpp"

namespace riordan {

enum class Kind { involution, pseudo_involution, quasi_involution, none };

std::string to_string(Kind kind);

struct Witness {
  std::size_t row;
  std::size_t col;
  Rational expected;
  Rational found;
};

struct ClassReport {
  Kind tested;  // the property that was checked
  Kind kind;    // == tested on success, Kind::none otherwise
  std::size_t dimension;
  std::optional<Witness> witness;  // set exactly when kind == Kind::none

  bool passed() const { return kind != Kind::none; }
  /// `PASS` or `FAIL (i,j): expected e, found v`.
  std::string summary() const;
};

/// M * M == I.
ClassReport check_involution(const TriMatrix<Rational>& m);

/// (M D)^2 == I with D = diag(1, -1, 1, ...). The equivalent form D M D == M^-1
/// is evaluated as well; a disagreement between the two is a logic_error.
ClassReport check_pseudo_involution(const TriMatrix<Rational>& m);

/// M aerated (zero whenever i - j is odd) and M^-1[i][j] = (-1)^((i-j)/2) M[i][j].
/// Throws MathError unless the diagonal is all ones.
ClassReport check_quasi_involution(const TriMatrix<Rational>& m);

/// (1 + (r-1)x)/(1-x); 1/(1-x)^2, x/(1-x)): Pascal with column 0 = (1, r, r, ...).
AlmostRiordan<Rational> make_Ar(const Rational& r, std::size_t prec);

/// ((f/x)^rho (f')^sigma ((f-1)/(x-1))^pi, f). The derivative costs one
/// coefficient of precision.
RiordanArray<Rational> make_upsilon(const Series<Rational>& f, long rho, long sigma, long pi);

class NotAnInvolution : public MathError {
 public:
  explicit NotAnInvolution(ClassReport report)
      : MathError("not an involution: " + report.summary()), report_(std::move(report)) {}
  const ClassReport& report() const noexcept { return report_; }

 private:
  ClassReport report_;
};

/// (x g / f; g, f), an involution whenever (g, f) is. Checks (g, f) at
/// dimension `n` first and throws NotAnInvolution with the witness otherwise.
AlmostRiordan<Rational> adjoin_involution(const RiordanArray<Rational>& r, std::size_t n);

/// ((x/f)^k g, f).
RiordanArray<Rational> involution_iterate(const RiordanArray<Rational>& r, long k);

/// (1; g, f).
AlmostRiordan<Rational> embed_trivial(const RiordanArray<Rational>& r);

}  // namespace riordan
