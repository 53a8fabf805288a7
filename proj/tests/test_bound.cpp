#include <doctest.h>

#include <cmath>

#include "bound.hpp"

using namespace rbclab;

TEST_CASE("bound endpoints") {
  // r = 1: the penalty term vanishes and the bound is the repetition size.
  CHECK(theorem_bound(7, 1, 3).lower_bound == Rational(28));
  // r = k: the Singleton point k + d.
  CHECK(theorem_bound(7, 7, 3).lower_bound == Rational(10));
  CHECK(theorem_bound(3, 2, 1).lower_bound == Rational(11, 2));
  CHECK(theorem_bound(3, 2, 1).lower_bound_int == 6);
  CHECK_THROWS_AS(theorem_bound(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem_bound(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem_bound(3, 2, -1), std::invalid_argument);
}

TEST_CASE("flat-regime threshold") {
  CHECK(repetition_threshold(12, 0) == doctest::Approx(12.0));
  CHECK(repetition_threshold(100, 100) ==
        doctest::Approx(200.0 - std::sqrt(30000.0)));
  // At d = r the crossover sits near (sqrt(2) - 1) k.
  const double cross = (std::sqrt(2.0) - 1.0) * 100.0;
  CHECK(theorem_bound(100, 41, 41).regime == Regime::repetition_optimal);
  CHECK(theorem_bound(100, 42, 42).regime == Regime::penalty_active);
  CHECK(41.0 < cross);
  CHECK(cross < 42.0);
}

TEST_CASE("regime flag matches the exact inequality and the bound value") {
  for (long long k : {1, 2, 3, 5, 17, 100, 200})
    for (long long d : {0, 1, 2, 7, 50, 400})
      for (long long r = 1; r <= k; ++r) {
        const BoundResult b = theorem_bound(k, r, d);
        CHECK((b.regime == Regime::repetition_optimal) ==
              (2 * d * (r - 1) <= (k - r) * (k - r)));
        CHECK((b.regime == Regime::repetition_optimal) ==
              (b.lower_bound == Rational(k * (d + 1))));
      }
}

TEST_CASE("bound is non-increasing in r") {
  for (long long k : {1, 3, 10, 57, 200})
    for (long long d : {0, 1, 2, 3, 5, 10, 50, 100, 400}) {
      Rational prev = theorem_bound(k, 1, d).lower_bound;
      for (long long r = 2; r <= k; ++r) {
        const Rational cur = theorem_bound(k, r, d).lower_bound;
        CHECK(cur <= prev);
        prev = cur;
      }
    }
}

TEST_CASE("exact equality can extend the flat segment past the threshold") {
  // k = 100, d = 2: the penalty term is exactly zero at r = 82 even though
  // the square-root threshold evaluates to about 81.9.
  const BoundResult b = theorem_bound(100, 82, 2);
  CHECK(b.regime == Regime::repetition_optimal);
  CHECK(b.lower_bound == Rational(300));
  CHECK(b.threshold_r == doctest::Approx(81.9002).epsilon(1e-4));
  CHECK(theorem_bound(100, 83, 2).regime == Regime::penalty_active);
}

TEST_CASE("rational rendering") {
  CHECK(Rational(11, 2).str() == "11/2");
  CHECK(Rational(12, 2).str() == "6");
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK(decimal_6sig(Rational(1, 3)) == "0.333333");
  CHECK(decimal_6sig(Rational(100, 102)) == "0.980392");
  CHECK(decimal_6sig(Rational(100, 10100)) == "0.00990099");
  CHECK(decimal_6sig(Rational(1, 2)) == "0.500000");
  CHECK(decimal_6sig(Rational(1)) == "1.00000");
  CHECK(decimal_6sig(Rational(200, 561)) == "0.356506");
  CHECK_THROWS_AS(decimal_6sig(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("figure table rows") {
  const auto rows = figure_table(100, {2, 100}, 1, 100);
  REQUIRE(rows.size() == 200);
  CHECK(rows[0].d == 2);
  CHECK(rows[0].r == 1);
  CHECK(rows[0].rate == Rational(1, 3));
  CHECK(rows[99].rate == Rational(100, 102));   // d=2, r=100
  CHECK(rows[100 + 25].rate == Rational(100, 10100));  // d=100, r=26: flat
  CHECK(rows[100 + 99].rate == Rational(1, 2));        // d=100, r=100

  // Rates never exceed 1 and never drop as r grows (the n bound shrinks).
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].d == rows[i - 1].d) CHECK(rows[i - 1].rate <= rows[i].rate);
}

TEST_CASE("figure CSV shape and determinism") {
  const std::string csv = figure_csv(10, {2, 1}, 1, 10);
  CHECK(csv.rfind("d,r,rate_upper_bound\n", 0) == 0);
  CHECK(csv.find("1,1,0.500000\n") != std::string::npos);  // d sorted first
  CHECK(csv.find("\r") == std::string::npos);              // LF only
  CHECK(csv == figure_csv(10, {1, 2}, 1, 10));             // order-insensitive
  CHECK(figure_csv(10, {2}, 1, 10) == figure_csv(10, {2, 2}, 1, 10));
}

TEST_CASE("bound text rendering") {
  const std::string text = render_bound(3, 2, 1, theorem_bound(3, 2, 1));
  CHECK(text.find("lower_bound: 11/2\n") != std::string::npos);
  CHECK(text.find("lower_bound_int: 6\n") != std::string::npos);
  CHECK(text.find("regime: penalty_active\n") != std::string::npos);
}
