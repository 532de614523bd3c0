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

#include "riordan/involcheck.hpp"

#include <sstream>
#include <stdexcept>

namespace riordan {

namespace {

// First entry (row-major) where `m` differs from the identity.
std::optional<Witness> identity_violation(const TriMatrix<Rational>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational expected(i == j ? 1 : 0);
      if (!(m(i, j) == expected)) return Witness{i, j, expected, m(i, j)};
    }
  }
  return std::nullopt;
}

ClassReport make_report(Kind tested, std::size_t n, std::optional<Witness> w) {
  return ClassReport{tested, w ? Kind::none : tested, n, std::move(w)};
}

bool diagonal_invertible(const TriMatrix<Rational>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i).is_zero()) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::involution:
      return "involution";
    case Kind::pseudo_involution:
      return "pseudo_involution";
    case Kind::quasi_involution:
      return "quasi_involution";
    case Kind::none:
      return "none";
  }
  return "none";
}

std::string ClassReport::summary() const {
  if (!witness) return "PASS";
  std::ostringstream os;
  os << "FAIL (" << witness->row << ',' << witness->col << "): expected " << witness->expected << ", found "
     << witness->found;
  return os.str();
}

ClassReport check_involution(const TriMatrix<Rational>& m) {
  return make_report(Kind::involution, m.size(), identity_violation(mat_mul(m, m)));
}

ClassReport check_pseudo_involution(const TriMatrix<Rational>& m) {
  const TriMatrix<Rational> md = mat_mul(m, TriMatrix<Rational>::alternating_diagonal(m.size()));
  auto witness = identity_violation(mat_mul(md, md));

  const bool conjugate_form = diagonal_invertible(m) && sign_conjugate(m) == mat_inverse(m);
  if (conjugate_form != !witness.has_value()) {
    throw std::logic_error("pseudo-involution checks disagree: (M D)^2 = I is " +
                           std::string(witness ? "false" : "true") + " but D M D = M^-1 is " +
                           (conjugate_form ? "true" : "false"));
  }
  return make_report(Kind::pseudo_involution, m.size(), std::move(witness));
}

ClassReport check_quasi_involution(const TriMatrix<Rational>& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m(i, i).is_one()) {
      throw MathError("quasi-involution check needs a unit diagonal; entry (" + std::to_string(i) + "," +
                      std::to_string(i) + ") is " + m(i, i).to_string());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((i - j) % 2 == 1 && !m(i, j).is_zero()) {
        return make_report(Kind::quasi_involution, n, Witness{i, j, Rational(0), m(i, j)});
      }
    }
  }
  const TriMatrix<Rational> inv = mat_inverse(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::size_t d = i - j;
      Rational expected(0);
      if (d % 2 == 0) expected = (d / 2) % 2 == 0 ? m(i, j) : -m(i, j);
      if (!(inv(i, j) == expected)) return make_report(Kind::quasi_involution, n, Witness{i, j, expected, inv(i, j)});
    }
  }
  return make_report(Kind::quasi_involution, n, std::nullopt);
}

AlmostRiordan<Rational> make_Ar(const Rational& r, std::size_t prec) {
  const auto one = Series<Rational>::one(prec);
  const auto x = Series<Rational>::x(prec);
  const auto one_minus_x = one - x;
  const Series<Rational> a = divide(one + (r - Rational(1)) * x, one_minus_x);
  const Series<Rational> g = mul_invert(one_minus_x * one_minus_x);
  return AlmostRiordan<Rational>({a}, g, divide(x, one_minus_x));
}

RiordanArray<Rational> make_upsilon(const Series<Rational>& f, long rho, long sigma, long pi) {
  const std::size_t p = f.prec();
  const auto x = Series<Rational>::x(p);
  const auto one = Series<Rational>::one(p);
  const Series<Rational> f_over_x = shift_div(f, 1);
  const Series<Rational> df = derivative(f);
  const Series<Rational> secant = divide(f - one, x - one);
  const Series<Rational> g = pow_int(f_over_x, rho) * pow_int(df, sigma) * pow_int(secant, pi);
  return RiordanArray<Rational>(g, f);
}

AlmostRiordan<Rational> adjoin_involution(const RiordanArray<Rational>& r, std::size_t n) {
  ClassReport report = check_involution(riordan_to_matrix(r, n));
  if (!report.passed()) throw NotAnInvolution(std::move(report));
  const Series<Rational> a = divide(r.g(), shift_div(r.f(), 1));
  return AlmostRiordan<Rational>({a}, r.g(), r.f());
}

RiordanArray<Rational> involution_iterate(const RiordanArray<Rational>& r, long k) {
  const Series<Rational> x_over_f = mul_invert(shift_div(r.f(), 1));
  return RiordanArray<Rational>(pow_int(x_over_f, k) * r.g(), r.f());
}

AlmostRiordan<Rational> embed_trivial(const RiordanArray<Rational>& r) {
  return AlmostRiordan<Rational>({Series<Rational>::one(r.prec())}, r.g(), r.f());
}

}  // namespace riordan
