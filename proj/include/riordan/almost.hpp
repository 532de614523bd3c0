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

// Almost-Riordan arrays of order m: (a0, ..., a_{m-1}; g, f).
//
// Column k < m of the matrix is x^k a_k, column k >= m is x^m g f^(k-m).
// Order 0 is an ordinary Riordan array. Orders 1 and 2 use the closed
// product/inverse formulas; every order also has a matrix route (multiply or
// invert at a working dimension, then read the generating functions back off
// the columns) which is the only route for m >= 3.

#include <algorithm>
#include <string>
#include <vector>

#include "riordan/riordan.hpp"

namespace riordan {

template <Scalar S>
class AlmostRiordan {
 public:
  AlmostRiordan(std::vector<Series<S>> prefix, const Series<S>& g, const Series<S>& f)
      : prefix_(std::move(prefix)), g_(g), f_(f) {
    const RiordanArray<S> interior(g, f);  // validates g and f
    warnings_ = interior.warnings();
    std::size_t p = interior.prec();
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      if (is_zero(prefix_[k][0])) {
        throw MathError("prefix series " + std::to_string(k) + " has zero constant term");
      }
      if (!(prefix_[k][0] == S(1))) {
        warnings_.push_back("prefix " + std::to_string(k) + " starts with " + to_string(prefix_[k][0]) +
                            " (normalised arrays start with 1)");
      }
      p = std::min(p, prefix_[k].prec());
    }
    if (p < 2) throw PrecisionError("almost-Riordan array needs every component to two coefficients");
    for (auto& a : prefix_) a = a.truncate(p);
    g_ = interior.g().truncate(p);
    f_ = interior.f().truncate(p);
  }

  AlmostRiordan(const RiordanArray<S>& r) : AlmostRiordan({}, r.g(), r.f()) {}  // NOLINT

  /// (1, ..., 1; 1, x), whose matrix is the identity.
  static AlmostRiordan identity(std::size_t order, std::size_t prec) {
    return AlmostRiordan(std::vector<Series<S>>(order, Series<S>::one(prec)), Series<S>::one(prec),
                         Series<S>::x(prec));
  }

  std::size_t order() const { return prefix_.size(); }
  const std::vector<Series<S>>& prefix() const { return prefix_; }
  const Series<S>& prefix(std::size_t k) const { return prefix_.at(k); }
  const Series<S>& g() const { return g_; }
  const Series<S>& f() const { return f_; }
  std::size_t prec() const { return g_.prec(); }
  RiordanArray<S> interior() const { return RiordanArray<S>(g_, f_); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  friend bool operator==(const AlmostRiordan& a, const AlmostRiordan& b) {
    return a.prefix_ == b.prefix_ && a.g_ == b.g_ && a.f_ == b.f_;
  }

 private:
  std::vector<Series<S>> prefix_;
  Series<S> g_;
  Series<S> f_;
  std::vector<std::string> warnings_;
};

namespace detail {

// Matrix of dimension prec + order whose column k holds the certified rows
// 0 .. prec + min(k, order) - 1 and zeros below. Products and inverses of such
// matrices are exact on the same staggered row ranges, which is exactly what
// extract_almost() reads back.
template <Scalar S>
TriMatrix<S> staggered_matrix(const AlmostRiordan<S>& a) {
  const std::size_t m = a.order();
  const std::size_t p = a.prec();
  const std::size_t w = p + m;
  TriMatrix<S> out(w);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < p && i + k < w; ++i) out.set(i + k, k, a.prefix(k)[i]);
  }
  Series<S> column = a.g();
  for (std::size_t k = m; k < w; ++k) {
    for (std::size_t i = 0; i < p && i + m < w; ++i) {
      if (i + m >= k) out.set(i + m, k, column[i]);
    }
    if (k + 1 < w) column = column * a.f();
  }
  return out;
}

template <Scalar S>
Series<S> column_series(const TriMatrix<S>& m, std::size_t col, std::size_t first_row, std::size_t len) {
  std::vector<S> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(m.at(first_row + i, col));
  return Series<S>(std::move(v));
}

template <Scalar S>
AlmostRiordan<S> extract_almost(const TriMatrix<S>& m, std::size_t order, std::size_t prec) {
  if (m.size() < order + prec || prec < 2) {
    throw PrecisionError("working matrix too small to recover an order-" + std::to_string(order) +
                         " element of precision " + std::to_string(prec));
  }
  std::vector<Series<S>> prefix;
  for (std::size_t k = 0; k < order; ++k) prefix.push_back(column_series(m, k, k, prec));
  const Series<S> g = column_series(m, order, order, prec);
  const Series<S> gf = column_series(m, order + 1, order, prec);
  return AlmostRiordan<S>(std::move(prefix), g, divide(gf, g));
}

}  // namespace detail

/// Column k < m is x^k a_k, column k >= m is x^m g f^(k-m).
template <Scalar S>
TriMatrix<S> almost_to_matrix(const AlmostRiordan<S>& a, std::size_t n) {
  if (a.prec() < n) {
    throw PrecisionError("matrix of dimension " + std::to_string(n) + " from an element of precision " +
                         std::to_string(a.prec()));
  }
  const std::size_t m = a.order();
  TriMatrix<S> out(n);
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    for (std::size_t i = k; i < n; ++i) out.set(i, k, a.prefix(k)[i - k]);
  }
  if (m >= n) return out;
  Series<S> column = a.g();
  for (std::size_t k = m; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) out.set(i, k, column[i - m]);
    if (k + 1 < n) column = column * a.f();
  }
  return out;
}

/// Fundamental theorem: (a0..a_{m-1}; g, f) h = sum_{k<m} h_k x^k a_k + x^m g h~(f),
/// where h~ = (h - h_0 - ... - h_{m-1} x^{m-1}) / x^m.
template <Scalar S>
Series<S> almost_apply(const AlmostRiordan<S>& a, const Series<S>& h) {
  const std::size_t m = a.order();
  if (h.prec() <= m) {
    throw PrecisionError("series of precision " + std::to_string(h.prec()) + " cannot act through an order-" +
                         std::to_string(m) + " element");
  }
  const Series<S> tail = shift_div(drop_head(h, m), m);
  Series<S> out = (a.g() * compose(tail, a.f())).mul_xpow(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (is_zero(h[k])) continue;
    out = out + h[k] * a.prefix(k).mul_xpow(k);
  }
  return out;
}

/// Product through the matrix realisation; valid for every order.
template <Scalar S>
AlmostRiordan<S> almost_mul_matrix(const AlmostRiordan<S>& a, const AlmostRiordan<S>& b) {
  if (a.order() != b.order()) throw MathError("order mismatch in product");
  const std::size_t p = std::min(a.prec(), b.prec());
  const AlmostRiordan<S> at(a.prefix(), a.g().truncate(p), a.f().truncate(p));
  const AlmostRiordan<S> bt(b.prefix(), b.g().truncate(p), b.f().truncate(p));
  return detail::extract_almost(mat_mul(detail::staggered_matrix(at), detail::staggered_matrix(bt)), a.order(), p);
}

/// Inverse through the matrix realisation; valid for every order.
template <Scalar S>
AlmostRiordan<S> almost_inverse_matrix(const AlmostRiordan<S>& a) {
  return detail::extract_almost(mat_inverse(detail::staggered_matrix(a)), a.order(), a.prec());
}

/// (a; g, f)(b; u, v) = ((a; g, f) b; g u(f), v(f)) for order 1; the matrix
/// route for order >= 2.
template <Scalar S>
AlmostRiordan<S> almost_mul(const AlmostRiordan<S>& a, const AlmostRiordan<S>& b) {
  if (a.order() != b.order()) {
    throw MathError("order mismatch in product: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  if (a.order() == 0) return AlmostRiordan<S>(riordan_mul(a.interior(), b.interior()));
  if (a.order() == 1) {
    const RiordanArray<S> inner = riordan_mul(a.interior(), b.interior());
    return AlmostRiordan<S>({almost_apply(a, b.prefix(0))}, inner.g(), inner.f());
  }
  return almost_mul_matrix(a, b);
}

template <Scalar S>
AlmostRiordan<S> almost_inverse(const AlmostRiordan<S>& a) {
  const std::size_t m = a.order();
  if (m == 0) return AlmostRiordan<S>(riordan_inverse(a.interior()));

  const Series<S> fbar = comp_inverse(a.f());
  const Series<S> g_inv = mul_invert(compose(a.g(), fbar));
  const std::size_t p = a.prec();
  if (m == 1) {
    // a* = (1; -1/g(fbar), fbar) a when a_0 = 1. For a general unit a_0 the
    // same array acts on a - a_0 + 1 and the result is scaled by 1/a_0.
    const S a0 = a.prefix(0)[0];
    const AlmostRiordan<S> act({Series<S>::one(p)}, -g_inv, fbar);
    Series<S> shifted = a.prefix(0) - Series<S>::constant(a0 - S(1), p);
    Series<S> astar = unit_inverse(a0) * almost_apply(act, shifted);
    return AlmostRiordan<S>({astar}, g_inv, fbar);
  }
  if (m == 2 && a.prefix(0)[0] == S(1) && a.prefix(1)[0] == S(1)) {
    // b* = (1; -1/g(fbar), fbar) b,  a** = (1, -b*; -1/g(fbar), fbar) a.
    const AlmostRiordan<S> act1({Series<S>::one(p)}, -g_inv, fbar);
    const Series<S> bstar = almost_apply(act1, a.prefix(1));
    const AlmostRiordan<S> act2({Series<S>::one(p), -bstar}, -g_inv, fbar);
    const Series<S> astar = almost_apply(act2, a.prefix(0));
    return AlmostRiordan<S>({astar, bstar}, g_inv, fbar);
  }
  return almost_inverse_matrix(a);
}

template <Scalar S>
AlmostRiordan<S> almost_pow(const AlmostRiordan<S>& a, long p) {
  AlmostRiordan<S> base = p < 0 ? almost_inverse(a) : a;
  unsigned long n = p < 0 ? 0UL - static_cast<unsigned long>(p) : static_cast<unsigned long>(p);
  AlmostRiordan<S> result = AlmostRiordan<S>::identity(a.order(), a.prec());
  while (n > 0) {
    if (n & 1UL) result = almost_mul(result, base);
    n >>= 1;
    if (n > 0) base = almost_mul(base, base);
  }
  return result;
}

}  // namespace riordan
