#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/rational.hpp"

using pnf::Error;
using pnf::ErrorCode;
using pnf::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a < Rational(2, 3));
  CHECK(Rational(-1) < Rational(1, 1000000));
}

TEST_CASE("string form") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-7, 2).str() == "-7/2");
}

TEST_CASE("zero denominator and division by zero are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big * big, Error);
  try {
    big* big;
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
  // Wide intermediates keep representable results exact.
  Rational x(INT64_MAX / 2, 3);
  CHECK((x + x) * Rational(3) == Rational(INT64_MAX - 1));
}
