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

// Exact N x N lower-triangular matrices.
//
// Nothing here touches the series layer: products and inverses are plain
// matrix arithmetic, so the matrix realisation of a group element can be used
// to check the generating-function formulas independently.

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "riordan/error.hpp"
#include "riordan/series.hpp"

namespace riordan {

template <Scalar S>
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t n) : n_(n), entries_(n * (n + 1) / 2, S(0)) {}

  static TriMatrix identity(std::size_t n) {
    TriMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, S(1));
    return m;
  }

  /// diag(1, -1, 1, -1, ...).
  static TriMatrix alternating_diagonal(std::size_t n) {
    TriMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, S(i % 2 == 0 ? 1 : -1));
    return m;
  }

  /// Rows of a square array; entries above the diagonal must be zero.
  static TriMatrix from_rows(const std::vector<std::vector<S>>& rows) {
    TriMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw MathError("matrix rows must all have length " + std::to_string(rows.size()));
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (j > i) {
          if (!is_zero(rows[i][j])) throw MathError("entry above the diagonal is nonzero");
        } else {
          m.set(i, j, rows[i][j]);
        }
      }
    }
    return m;
  }

  std::size_t size() const { return n_; }

  S at(std::size_t i, std::size_t j) const {
    check(i, j);
    return j > i ? S(0) : entries_[index(i, j)];
  }
  const S& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    if (j > i) throw MathError("upper-triangular entry has no storage");
    return entries_[index(i, j)];
  }
  void set(std::size_t i, std::size_t j, S value) {
    check(i, j);
    if (j > i) {
      if (!is_zero(value)) throw MathError("cannot set a nonzero entry above the diagonal");
      return;
    }
    entries_[index(i, j)] = std::move(value);
  }

  std::vector<S> column(std::size_t j) const {
    std::vector<S> c(n_, S(0));
    for (std::size_t i = j; i < n_; ++i) c[i] = entries_[index(i, j)];
    return c;
  }

  friend bool operator==(const TriMatrix& a, const TriMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        cells.push_back(riordan::to_string(at(i, j)));
        width = std::max(width, cells.back().size());
      }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::string& c = cells[i * n_ + j];
        if (j) os << ' ';
        os << std::string(width - c.size(), ' ') << c;
      }
      os << '\n';
    }
    return os.str();
  }

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) os << ',';
        os << riordan::to_string(at(i, j));
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  static std::size_t index(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }
  void check(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw MathError("matrix index out of range");
  }

  std::size_t n_;
  std::vector<S> entries_;
};

template <Scalar S>
TriMatrix<S> mat_mul(const TriMatrix<S>& a, const TriMatrix<S>& b) {
  if (a.size() != b.size()) {
    throw MathError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  TriMatrix<S> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      S acc(0);
      for (std::size_t k = j; k <= i; ++k) {
        const S& x = a(i, k);
        if (is_zero(x)) continue;
        const S& y = b(k, j);
        if (is_zero(y)) continue;
        acc = acc + x * y;
      }
      c.set(i, j, std::move(acc));
    }
  }
  return c;
}

/// Inverse by forward substitution, one column at a time. Every diagonal
/// entry must be a nonzero constant.
template <Scalar S>
TriMatrix<S> mat_inverse(const TriMatrix<S>& a) {
  const std::size_t n = a.size();
  std::vector<S> inv_diag;
  inv_diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a(i, i))) throw NotAUnit("zero diagonal entry at " + std::to_string(i));
    inv_diag.push_back(unit_inverse(a(i, i)));
  }
  TriMatrix<S> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x.set(j, j, inv_diag[j]);
    for (std::size_t i = j + 1; i < n; ++i) {
      S acc(0);
      for (std::size_t k = j; k < i; ++k) {
        const S& l = a(i, k);
        if (is_zero(l)) continue;
        const S& r = x(k, j);
        if (is_zero(r)) continue;
        acc = acc + l * r;
      }
      x.set(i, j, -(inv_diag[i] * acc));
    }
  }
  return x;
}

/// Entry (i, j) multiplied by (-1)^(i+j), i.e. D A D with D = diag(1,-1,...).
template <Scalar S>
TriMatrix<S> sign_conjugate(const TriMatrix<S>& a) {
  TriMatrix<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, (i + j) % 2 == 0 ? a(i, j) : -a(i, j));
  }
  return out;
}

template <Scalar S>
bool is_identity(const TriMatrix<S>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!(a(i, j) == S(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

/// A * v for a column vector of length size().
template <Scalar S>
std::vector<S> mat_vec(const TriMatrix<S>& a, std::span<const S> v) {
  if (v.size() != a.size()) throw MathError("vector length does not match matrix dimension");
  std::vector<S> out(a.size(), S(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if (is_zero(a(i, k)) || is_zero(v[k])) continue;
      out[i] = out[i] + a(i, k) * v[k];
    }
  }
  return out;
}

}  // namespace riordan
