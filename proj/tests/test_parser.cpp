#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "diffalg/parse.hpp"
#include "verify/verify.hpp"

using namespace pnf::diffalg;
using pnf::Error;
using pnf::ErrorCode;

TEST_CASE("basic expressions") {
  CHECK(format(parse("t2 + 2*t*t1")) == "t2 + 2*t*t1");
  CHECK(parse("t0") == parse("t"));
  CHECK(parse("G*t1 + 3*t^2*t1") == parse("(G + 3*t^2)*t1"));
  CHECK(format(parse("0")) == "0");
  CHECK(format(parse("t - t")) == "0");
  CHECK(format(parse("-t1")) == "-t1");
  CHECK(format(parse("3/6")) == "1/2");
  CHECK(format(parse("2^3")) == "8");
  CHECK(format(parse("(t + 1)^2")) == "1 + 2*t + t^2");
}

TEST_CASE("generator inference and expectation") {
  CHECK(parse("t1").generator() == Generator::Tau);
  CHECK(parse("k1").generator() == Generator::Kappa);
  CHECK(parse("G + 1").generator() == Generator::Tau);  // default
  CHECK(parse("G + 1", Generator::Kappa).generator() == Generator::Kappa);
  CHECK(parse("2*k2 + G*k", Generator::Kappa) == parse("G*k + 2*k2"));
  CHECK_THROWS_AS(parse("t1 + k1"), Error);
  CHECK_THROWS_AS(parse("k1", Generator::Tau), Error);
  try {
    parse("t*k");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneratorMismatch);
  }
}

TEST_CASE("syntax errors carry the offset") {
  try {
    parse("t1 -");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("t1 +* t2"), Error);
  CHECK_THROWS_AS(parse("(t1"), Error);
  CHECK_THROWS_AS(parse("t1)"), Error);
  CHECK_THROWS_AS(parse("x + 1"), Error);
  CHECK_THROWS_AS(parse("1/0"), Error);
  CHECK_THROWS_AS(parse("t^"), Error);
}

TEST_CASE("round trip over the corpus") {
  for (const auto& text : pnf::verify::expression_corpus()) {
    CAPTURE(text);
    DiffPoly p = parse(text);
    std::string canon = format(p);
    DiffPoly q = parse(canon);
    CHECK(p == q);
    CHECK(format(q) == canon);
  }
}

TEST_CASE("canonical ordering in output") {
  // Ascending total degree, then lexicographic on ascending-order
  // exponent vectors; G powers ascend within a coefficient.
  CHECK(format(parse("3*t^2*t1 + t3 + 3*t1^2 + G*t1 + 3*t*t2")) ==
        "t3 + G*t1 + 3*t1^2 + 3*t*t2 + 3*t^2*t1");
  CHECK(format(parse("t1 + G*t1 + G^2*t1")) == "t1 + G*t1 + G^2*t1");
  // Within one degree the higher derivative order sorts first.
  CHECK(format(parse("1 + t + t1")) == "1 + t1 + t");
}
