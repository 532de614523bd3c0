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

// Truncated formal power series over an exact scalar domain.
//
// A Series carries exactly `prec` known coefficients c_0 .. c_{prec-1}.
// Every operation returns the largest precision it can certify from its
// inputs; nothing is silently padded with zeros.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "riordan/error.hpp"
#include "riordan/linexpr.hpp"
#include "riordan/rational.hpp"

namespace riordan {

template <class S>
concept Scalar = requires(S a, const S& b) {
  S(0);
  S(1);
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -b } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(b) } -> std::convertible_to<bool>;
  { unit_inverse(b) } -> std::convertible_to<S>;
  { to_string(b) } -> std::convertible_to<std::string>;
};

template <Scalar S>
class Series {
 public:
  using scalar_type = S;

  explicit Series(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PrecisionError("a series needs at least one coefficient");
  }

  static Series constant(const S& c, std::size_t prec) {
    std::vector<S> v(prec, S(0));
    if (prec > 0) v[0] = c;
    return Series(std::move(v));
  }
  static Series zero(std::size_t prec) { return constant(S(0), prec); }
  static Series one(std::size_t prec) { return constant(S(1), prec); }
  /// c*x^k known to `prec` coefficients.
  static Series monomial(std::size_t k, const S& c, std::size_t prec) {
    std::vector<S> v(prec, S(0));
    if (k < prec) v[k] = c;
    return Series(std::move(v));
  }
  static Series x(std::size_t prec) { return monomial(1, S(1), prec); }

  std::size_t prec() const { return coeffs_.size(); }
  const std::vector<S>& coeffs() const { return coeffs_; }

  const S& operator[](std::size_t n) const {
    if (n >= coeffs_.size()) {
      throw PrecisionError("coefficient " + std::to_string(n) + " requested from a series of precision " +
                           std::to_string(coeffs_.size()));
    }
    return coeffs_[n];
  }

  /// Index of the first nonzero coefficient; prec() when all known ones vanish.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!is_zero(coeffs_[i])) return i;
    }
    return coeffs_.size();
  }

  Series truncate(std::size_t p) const {
    if (p == 0 || p > prec()) {
      throw PrecisionError("cannot truncate precision " + std::to_string(prec()) + " to " + std::to_string(p));
    }
    return Series(std::vector<S>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(p)));
  }

  /// x^k * s; gains k coefficients of precision.
  Series mul_xpow(std::size_t k) const {
    std::vector<S> v(k, S(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(v));
  }

  Series operator-() const {
    std::vector<S> v;
    v.reserve(prec());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Series(std::move(v));
  }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t p = std::min(a.prec(), b.prec());
    std::vector<S> v;
    v.reserve(p);
    for (std::size_t i = 0; i < p; ++i) v.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return Series(std::move(v));
  }

  friend Series operator-(const Series& a, const Series& b) {
    const std::size_t p = std::min(a.prec(), b.prec());
    std::vector<S> v;
    v.reserve(p);
    for (std::size_t i = 0; i < p; ++i) v.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return Series(std::move(v));
  }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t p = std::min(a.prec(), b.prec());
    std::vector<S> v(p, S(0));
    for (std::size_t i = 0; i < p; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < p; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Series(std::move(v));
  }

  friend Series operator*(const S& k, const Series& s) {
    std::vector<S> v;
    v.reserve(s.prec());
    for (const auto& c : s.coeffs_) v.push_back(k * c);
    return Series(std::move(v));
  }

  /// Coefficient-wise equality up to the common precision.
  friend bool operator==(const Series& a, const Series& b) {
    const std::size_t p = std::min(a.prec(), b.prec());
    for (std::size_t i = 0; i < p; ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

  /// `[c0, c1, ...] (prec P)`.
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) os << ", ";
      os << riordan::to_string(coeffs_[i]);
    }
    os << "] (prec " << coeffs_.size() << ')';
    return os.str();
  }

 private:
  std::vector<S> coeffs_;
};

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Series<S>& s) {
  return os << s.to_string();
}

/// Converts every coefficient, e.g. Rational -> LinExpr.
template <Scalar To, Scalar From>
Series<To> series_cast(const Series<From>& s) {
  std::vector<To> v;
  v.reserve(s.prec());
  for (const auto& c : s.coeffs()) v.push_back(To(c));
  return Series<To>(std::move(v));
}

/// Reciprocal of a series whose constant term is a unit.
template <Scalar S>
Series<S> mul_invert(const Series<S>& u) {
  if (is_zero(u[0])) throw NotAUnit("series with zero constant term");
  const S inv0 = unit_inverse(u[0]);
  const std::size_t p = u.prec();
  std::vector<S> v(p, S(0));
  v[0] = inv0;
  for (std::size_t n = 1; n < p; ++n) {
    S acc(0);
    for (std::size_t j = 1; j <= n; ++j) {
      if (is_zero(u[j])) continue;
      acc = acc + u[j] * v[n - j];
    }
    v[n] = -(inv0 * acc);
  }
  return Series<S>(std::move(v));
}

/// (h(x) - h_0 - ... - h_{k-1} x^{k-1}) / x^k after checking those terms vanish.
template <Scalar S>
Series<S> shift_div(const Series<S>& u, std::size_t k) {
  if (k == 0) return u;
  if (k >= u.prec()) {
    throw PrecisionError("dividing a series of precision " + std::to_string(u.prec()) + " by x^" +
                         std::to_string(k) + " leaves no known coefficient");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_zero(u[i])) throw MathError("not divisible by x^" + std::to_string(k));
  }
  return Series<S>(std::vector<S>(u.coeffs().begin() + static_cast<std::ptrdiff_t>(k), u.coeffs().end()));
}

/// u minus its first k terms, i.e. the part divisible by x^k.
template <Scalar S>
Series<S> drop_head(const Series<S>& u, std::size_t k) {
  std::vector<S> v = u.coeffs();
  for (std::size_t i = 0; i < std::min(k, v.size()); ++i) v[i] = S(0);
  return Series<S>(std::move(v));
}

/// a / b with valuation cancellation: the common power of x is removed first.
template <Scalar S>
Series<S> divide(const Series<S>& a, const Series<S>& b) {
  const std::size_t v = b.valuation();
  if (v >= b.prec()) throw PrecisionError("denominator has no certified nonzero coefficient");
  if (v > 0) {
    if (a.prec() <= v) throw PrecisionError("numerator too short to cancel x^" + std::to_string(v));
    for (std::size_t i = 0; i < v; ++i) {
      if (!is_zero(a[i])) throw MathError("pole at x=0");
    }
  }
  return shift_div(a, v) * mul_invert(shift_div(b, v));
}

/// g(f(x)) by Horner's rule over truncated powers of f.
template <Scalar S>
Series<S> compose(const Series<S>& g, const Series<S>& f) {
  if (!is_zero(f[0])) throw MathError("inner series must have zero constant term");
  const std::size_t p = std::min(g.prec(), f.prec());
  const Series<S> inner = f.truncate(p);
  Series<S> r = Series<S>::constant(g[p - 1], p);
  for (std::size_t k = p - 1; k-- > 0;) {
    r = r * inner;
    std::vector<S> v = r.coeffs();
    v[0] = v[0] + g[k];
    r = Series<S>(std::move(v));
  }
  return r;
}

/// Compositional inverse: the coefficients b_1, b_2, ... are solved one at
/// a time from [x^n] f(b(x)) = [x^n] x.
template <Scalar S>
Series<S> comp_inverse(const Series<S>& f) {
  if (f.prec() < 2) throw PrecisionError("compositional inverse needs at least two coefficients");
  if (!is_zero(f[0])) throw MathError("compositional inverse requires f_0 = 0");
  if (is_zero(f[1])) throw NotAUnit("compositional inverse requires f_1 != 0");
  const S inv1 = unit_inverse(f[1]);
  const std::size_t p = f.prec();
  std::vector<S> b(p, S(0));
  b[1] = inv1;
  for (std::size_t n = 2; n < p; ++n) {
    // [x^n] sum_k f_k b^k with b_n still zero.
    std::vector<S> power(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n + 1));
    S acc = f[1] * power[n];
    for (std::size_t k = 2; k <= n; ++k) {
      std::vector<S> next(n + 1, S(0));
      for (std::size_t i = 1; i <= n; ++i) {
        if (is_zero(power[i])) continue;
        for (std::size_t j = 1; i + j <= n; ++j) {
          if (is_zero(b[j])) continue;
          next[i + j] = next[i + j] + power[i] * b[j];
        }
      }
      power = std::move(next);
      if (!is_zero(f[k])) acc = acc + f[k] * power[n];
    }
    b[n] = -(inv1 * acc);
  }
  return Series<S>(std::move(b));
}

/// Square root with s_0 = 1 of a series with u_0 = 1.
template <Scalar S>
Series<S> sqrt_series(const Series<S>& u) {
  if (!(u[0] == S(1))) throw MathError("sqrt_series requires constant term 1");
  const std::size_t p = u.prec();
  const S half = unit_inverse(S(2));
  std::vector<S> s(p, S(0));
  s[0] = S(1);
  for (std::size_t n = 1; n < p; ++n) {
    S acc = u[n];
    for (std::size_t j = 1; j < n; ++j) acc = acc - s[j] * s[n - j];
    s[n] = half * acc;
  }
  return Series<S>(std::move(s));
}

template <Scalar S>
Series<S> derivative(const Series<S>& u) {
  if (u.prec() < 2) throw PrecisionError("derivative of a series with a single known coefficient");
  std::vector<S> v;
  v.reserve(u.prec() - 1);
  for (std::size_t n = 1; n < u.prec(); ++n) v.push_back(S(static_cast<long>(n)) * u[n]);
  return Series<S>(std::move(v));
}

/// Integer power by square-and-multiply; negative exponents go through mul_invert.
template <Scalar S>
Series<S> pow_int(const Series<S>& u, long e) {
  Series<S> base = e < 0 ? mul_invert(u) : u;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
  Series<S> result = Series<S>::one(u.prec());
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

/// u^e for e with denominator 1 or 2; half-integer powers require u_0 = 1.
inline Series<Rational> pow_rational(const Series<Rational>& u, const Rational& e) {
  if (e.is_integer()) return pow_int(u, e.numerator().get_si());
  if (e.denominator() != 2) throw MathError("exponent " + e.to_string() + " must have denominator 1 or 2");
  return pow_int(sqrt_series(u), e.numerator().get_si());
}

/// Shorthand for building fixtures: a series from integer coefficients.
inline Series<Rational> series_of(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Series<Rational>(std::move(v));
}

}  // namespace riordan
