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

#include <algorithm>
#include <string>
#include <vector>

#include "riordan/series.hpp"
#include "riordan/trimatrix.hpp"

namespace riordan {

/// Riordan group element (g, f) with g_0 != 0, f_0 = 0, f_1 != 0. Both
/// series are truncated to a common precision on construction.
template <Scalar S>
class RiordanArray {
 public:
  RiordanArray(const Series<S>& g, const Series<S>& f) : g_(g), f_(f) {
    if (is_zero(g_[0])) throw MathError("Riordan array requires g_0 != 0");
    if (!is_zero(f_[0])) throw MathError("Riordan array requires f_0 = 0");
    const std::size_t p = std::min(g_.prec(), f_.prec());
    if (p < 2) throw PrecisionError("Riordan array needs g and f to at least two coefficients");
    if (is_zero(f_[1])) throw MathError("Riordan array requires f_1 != 0");
    g_ = g_.truncate(p);
    f_ = f_.truncate(p);
    if (!(g_[0] == S(1))) warnings_.push_back("g_0 = " + to_string(g_[0]) + " (normalised arrays have g_0 = 1)");
    if (!(f_[1] == S(1)) && !(f_[1] == S(-1))) {
      warnings_.push_back("f_1 = " + to_string(f_[1]) + " (normalised arrays have f_1 = +-1)");
    }
  }

  static RiordanArray identity(std::size_t prec) {
    return RiordanArray(Series<S>::one(prec), Series<S>::x(prec));
  }

  const Series<S>& g() const { return g_; }
  const Series<S>& f() const { return f_; }
  std::size_t prec() const { return g_.prec(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Coefficient-wise equality of (g, f) up to the common precision.
  friend bool operator==(const RiordanArray& a, const RiordanArray& b) { return a.g_ == b.g_ && a.f_ == b.f_; }

 private:
  Series<S> g_;
  Series<S> f_;
  std::vector<std::string> warnings_;
};

/// T[n][k] = [x^n] g f^k.
template <Scalar S>
TriMatrix<S> riordan_to_matrix(const RiordanArray<S>& r, std::size_t n) {
  if (r.prec() < n) {
    throw PrecisionError("matrix of dimension " + std::to_string(n) + " from an element of precision " +
                         std::to_string(r.prec()));
  }
  TriMatrix<S> m(n);
  if (n == 0) return m;
  const Series<S> f = r.f().truncate(n);
  Series<S> column = r.g().truncate(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) m.set(i, k, column[i]);
    if (k + 1 < n) column = column * f;
  }
  return m;
}

/// (g, f) h = g * h(f).
template <Scalar S>
Series<S> riordan_apply(const RiordanArray<S>& r, const Series<S>& h) {
  return r.g() * compose(h, r.f());
}

/// (g, f)(u, v) = (g u(f), v(f)).
template <Scalar S>
RiordanArray<S> riordan_mul(const RiordanArray<S>& a, const RiordanArray<S>& b) {
  return RiordanArray<S>(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

/// (g, f)^{-1} = (1 / g(fbar), fbar).
template <Scalar S>
RiordanArray<S> riordan_inverse(const RiordanArray<S>& r) {
  const Series<S> fbar = comp_inverse(r.f());
  return RiordanArray<S>(mul_invert(compose(r.g(), fbar)), fbar);
}

template <Scalar S>
RiordanArray<S> riordan_pow(const RiordanArray<S>& r, long p) {
  RiordanArray<S> base = p < 0 ? riordan_inverse(r) : r;
  unsigned long n = p < 0 ? 0UL - static_cast<unsigned long>(p) : static_cast<unsigned long>(p);
  RiordanArray<S> result = RiordanArray<S>::identity(r.prec());
  while (n > 0) {
    if (n & 1UL) result = riordan_mul(result, base);
    n >>= 1;
    if (n > 0) base = riordan_mul(base, base);
  }
  return result;
}

}  // namespace riordan
