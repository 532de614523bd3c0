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
#include "riordan/linexpr.hpp"
#include "riordan/rational.hpp"

using riordan::LinExpr;
using riordan::Rational;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/-6").to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 5).is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), riordan::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), riordan::MathError);
  CHECK_THROWS_AS(Rational::parse(""), riordan::MathError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) * Rational(2, 3) == third);
  CHECK(Rational(1) / Rational(3) - third == Rational(0));
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), riordan::DivisionByZero);
  CHECK_THROWS_AS(riordan::unit_inverse(Rational(0)), riordan::NotAUnit);
  CHECK(riordan::unit_inverse(Rational(-2, 7)) == Rational(-7, 2));
}

TEST_CASE("rational growth beyond machine words") {
  Rational r(1);
  for (int i = 0; i < 40; ++i) r *= Rational(1000003);
  CHECK(r.numerator().get_str().size() > 200);
  CHECK(r / r == Rational(1));
}

TEST_CASE("exact square roots") {
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
  CHECK(Rational(0).exact_sqrt() == Rational(0));
}

TEST_CASE("rational field axioms on random samples") {
  oracle::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("linear expressions") {
  const LinExpr a = LinExpr::unknown("u2");
  const LinExpr b = LinExpr::unknown("u6", Rational(3));
  const LinExpr e = a * LinExpr(2) - b + LinExpr(5);
  CHECK(e.to_string() == "5 + 2*u2 - 3*u6");
  CHECK(e.coefficient("u6") == Rational(-3));
  CHECK(e.coefficient("u10") == Rational(0));
  CHECK((e - e).is_zero());
  CHECK((a - a).to_string() == "0");
  CHECK(LinExpr::unknown("u4", Rational(-1)).to_string() == "-u4");
  CHECK_THROWS_AS(a * b, riordan::NonlinearError);
  CHECK_THROWS_AS(a / b, riordan::NonlinearError);
  CHECK_THROWS_AS(riordan::unit_inverse(a), riordan::NotAUnit);
}

TEST_CASE("linear expression substitution, evaluation and solving") {
  const LinExpr u2 = LinExpr::unknown("u2");
  const LinExpr u4 = LinExpr::unknown("u4");
  const LinExpr eq = u4 - u2 * LinExpr(3) - LinExpr(1);
  const auto sol = eq.solve_for("u4");
  REQUIRE(sol.has_value());
  CHECK(*sol == u2 * LinExpr(3) + LinExpr(1));
  CHECK_FALSE(eq.solve_for("u8").has_value());
  CHECK(eq.substitute("u4", *sol).is_zero());
  CHECK(eq.evaluate({{"u2", Rational(2)}, {"u4", Rational(7)}}) == Rational(0));
  CHECK_THROWS(eq.evaluate({{"u2", Rational(2)}}));
}

TEST_CASE("linear expression vector space laws") {
  oracle::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const LinExpr a = LinExpr(gen.rational()) + LinExpr::unknown("p", gen.rational());
    const LinExpr b = LinExpr::unknown("q", gen.rational()) + LinExpr::unknown("p", gen.rational());
    const Rational k = gen.rational();
    CHECK(a + b == b + a);
    CHECK((a + b) * LinExpr(k) == a * LinExpr(k) + b * LinExpr(k));
    CHECK((a - b) + b == a);
  }
}
