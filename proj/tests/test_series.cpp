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


#include <doctest.h>

#include "oracles.hpp"
#include "riordan/error.hpp"
#include "riordan/series.hpp"

using oracle::Vec;
using riordan::Rational;
using riordan::Series;
using R = Series<Rational>;

namespace {

R geometric(long c, std::size_t n) {
  Vec v(n);
  Rational p(1);
  for (auto& x : v) {
    x = p;
    p *= Rational(c);
  }
  return R(v);
}

}  // namespace

TEST_CASE("construction and precision bookkeeping") {
  const R s = riordan::series_of({1, 2, 3});
  CHECK(s.prec() == 3);
  CHECK(s[2] == Rational(3));
  CHECK_THROWS_AS(s[3], riordan::PrecisionError);
  CHECK(s.to_string() == "[1, 2, 3] (prec 3)");
  CHECK(R::x(4).valuation() == 1);
  CHECK(s.mul_xpow(2).prec() == 5);
  CHECK(s.mul_xpow(2)[2] == Rational(1));
  CHECK(s.truncate(2).prec() == 2);
  CHECK((s + riordan::series_of({1, 1})).prec() == 2);
}

TEST_CASE("products match naive convolution") {
  oracle::Gen gen(21);
  for (int i = 0; i < 100; ++i) {
    const Vec a = gen.vec(12), b = gen.vec(12);
    CHECK(oracle::coeffs(R(a) * R(b), 12) == oracle::convolve(a, b, 12));
  }
}

TEST_CASE("reciprocal matches long division") {
  // 1/(1 - x - x^2): Fibonacci
  const R u = riordan::series_of({1, -1, -1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(oracle::coeffs(riordan::mul_invert(u), 10) ==
        oracle::long_division(oracle::ints({1}), oracle::ints({1, -1, -1}), 10));
  CHECK(riordan::mul_invert(u)[9] == Rational(55));
  CHECK_THROWS_AS(riordan::mul_invert(riordan::series_of({0, 1})), riordan::NotAUnit);
}

TEST_CASE("division cancels common powers of x") {
  const R num = riordan::series_of({0, 0, 1, 1, 0, 0});
  const R den = riordan::series_of({0, 0, 1, -1, 0, 0});
  const R q = riordan::divide(num, den);
  CHECK(q.prec() == 4);
  CHECK(oracle::coeffs(q, 4) == oracle::long_division(oracle::ints({1, 1}), oracle::ints({1, -1}), 4));
  CHECK_THROWS_WITH_AS(riordan::divide(riordan::series_of({1, 0, 0}), riordan::series_of({0, 1, 0})),
                       "pole at x=0", riordan::MathError);
}

TEST_CASE("composition and compositional inverse") {
  const R catalan_f = riordan::series_of({0, 1, -1, 0, 0, 0, 0, 0});  // x - x^2
  const R inv = riordan::comp_inverse(catalan_f);
  // x C(x) with C the Catalan generating function
  CHECK(oracle::coeffs(inv, 8) == oracle::ints({0, 1, 1, 2, 5, 14, 42, 132}));
  CHECK(riordan::compose(catalan_f, inv) == R::x(8));
  CHECK_THROWS_AS(riordan::compose(catalan_f, riordan::series_of({1, 1, 0})), riordan::MathError);
  CHECK_THROWS_AS(riordan::comp_inverse(riordan::series_of({0, 0, 1})), riordan::MathError);
}

TEST_CASE("compositional inverse agrees with Lagrange inversion") {
  oracle::Gen gen(22);
  for (int i = 0; i < 50; ++i) {
    const R f = gen.delta_series(10, false);
    CHECK(oracle::coeffs(riordan::comp_inverse(f), 10) == oracle::lagrange_inverse(f.coeffs(), 10));
  }
}

TEST_CASE("square roots, derivatives and powers") {
  const R u = riordan::series_of({1, -4, 0, 0, 0, 0, 0});  // 1 - 4x
  const R s = riordan::sqrt_series(u);
  CHECK(oracle::coeffs(s, 7) == oracle::sqrt_naive(u.coeffs(), 7));
  // (1 - 4x)^(-1/2) = sum binom(2n, n) x^n
  const R central = riordan::pow_rational(u, Rational(-1, 2));
  for (long n = 0; n < 7; ++n) CHECK(central[n] == oracle::binom(2 * n, n));
  CHECK_THROWS_AS(riordan::sqrt_series(riordan::series_of({4, 1})), riordan::MathError);
  CHECK_THROWS_AS(riordan::pow_rational(u, Rational(1, 3)), riordan::MathError);

  CHECK(riordan::derivative(geometric(2, 6)).prec() == 5);
  CHECK(oracle::coeffs(riordan::derivative(geometric(2, 6)), 5) == oracle::ints({2, 8, 24, 64, 160}));

  const R one_plus_x = riordan::series_of({1, 1, 0, 0, 0, 0, 0});
  for (long n = 0; n < 7; ++n) CHECK(riordan::pow_int(one_plus_x, 6)[n] == oracle::binom(6, n));
  CHECK(riordan::pow_int(one_plus_x, -1) == riordan::mul_invert(one_plus_x));
  CHECK(riordan::pow_int(one_plus_x, 0) == R::one(7));
}

TEST_CASE("shift and head removal") {
  const R s = riordan::series_of({0, 0, 3, 4, 5});
  CHECK(riordan::shift_div(s, 2) == riordan::series_of({3, 4, 5}));
  CHECK_THROWS_AS(riordan::shift_div(s, 3), riordan::MathError);
  CHECK_THROWS_AS(riordan::shift_div(s, 5), riordan::PrecisionError);
  CHECK(riordan::drop_head(riordan::series_of({1, 2, 3}), 1) == riordan::series_of({0, 2, 3}));
}

TEST_CASE("series kernel properties on random series") {
  oracle::Gen gen(23);
  constexpr std::size_t kPrec = 16;
  for (int i = 0; i < 200; ++i) {
    const R f = gen.delta_series(kPrec, false);
    const R fbar = riordan::comp_inverse(f);
    CHECK(riordan::compose(f, fbar) == R::x(kPrec));
    CHECK(riordan::compose(fbar, f) == R::x(kPrec));

    const R u = gen.unit_series(kPrec);
    const R s = riordan::sqrt_series(u);
    CHECK(s * s == u);

    const R w = gen.unit_series(kPrec, false);
    CHECK(riordan::mul_invert(w) * w == R::one(kPrec));
  }
}

TEST_CASE("composition is associative and distributes over products") {
  oracle::Gen gen(24);
  for (int i = 0; i < 40; ++i) {
    const R a = gen.unit_series(10, false), b = gen.unit_series(10, false);
    const R f = gen.delta_series(10, false), h = gen.delta_series(10, false);
    CHECK(riordan::compose(a * b, f) == riordan::compose(a, f) * riordan::compose(b, f));
    CHECK(riordan::compose(riordan::compose(a, f), h) == riordan::compose(a, riordan::compose(f, h)));
  }
}

TEST_CASE("linear-expression coefficients") {
  using L = Series<riordan::LinExpr>;
  const L a({riordan::LinExpr(1), riordan::LinExpr::unknown("u1"), riordan::LinExpr(0)});
  const L sq = a * riordan::series_cast<riordan::LinExpr>(riordan::series_of({1, 1, 1}));
  CHECK(sq[1].to_string() == "1 + u1");
  CHECK_THROWS_AS(a * a, riordan::NonlinearError);
}
