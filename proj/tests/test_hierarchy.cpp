#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "diffalg/parse.hpp"
#include "hierarchy/hierarchy.hpp"
#include "verify/randgen.hpp"

using namespace pnf::hierarchy;
using pnf::Error;
using pnf::Rational;
using pnf::diffalg::commutator;
using pnf::diffalg::parse;
using pnf::diffalg::total_derivative;
using pnf::geometry::FrenetField;
using pnf::verify::random_poly;
using pnf::verify::Rng;

namespace {
DiffPoly tau(const char* text) { return parse(text, Generator::Tau); }
DiffPoly zero() { return DiffPoly(Generator::Tau); }
}

TEST_CASE("burgers recursion operator") {
  auto r = RecursionOperator::burgers();
  CHECK(apply(r, tau("t1")) == tau("t2 + 2*t*t1"));
  CHECK(apply(r, zero()).is_zero());
  CHECK(apply(r, tau("t2 + 2*t*t1")) == tau("t3 + 3*t*t2 + 3*t1^2 + 3*t^2*t1"));
  // D^{-1} demands a total derivative.
  CHECK_THROWS_AS(apply(r, tau("t^2")), Error);
}

TEST_CASE("geometric recursion steps through the printed fields") {
  FrenetField v = FrenetField::tangent();
  v = geometric_recursion_step(v);
  CHECK(v == FrenetField::normal());
  v = geometric_recursion_step(v);
  CHECK(v.g == tau("t"));
  v = geometric_recursion_step(v);
  CHECK(v.g == tau("t1 + t^2"));
  v = geometric_recursion_step(v);
  CHECK(v.g == tau("t2 + 3*t*t1 + t^3"));
  CHECK(v.f.is_zero());
  CHECK(v.h.is_zero());
  CHECK_THROWS_AS(
      geometric_recursion_step(FrenetField(zero(), zero(), tau("1"))), Error);
}

TEST_CASE("hierarchy generation matches the reference transcription") {
  auto got = generate_hierarchy(5);
  const auto& ref = reference_hierarchy();
  REQUIRE(got.size() == 5);
  for (int n = 0; n < 5; ++n) {
    CAPTURE(n);
    CHECK(got[n].field == ref[n].field);
    CHECK(got[n].tau_flow == ref[n].tau_flow);
    CHECK(got[n].k_flow == ref[n].k_flow);
  }
  CHECK_THROWS_AS(generate_hierarchy(0), Error);
}

TEST_CASE("first two levels explicitly") {
  auto levels = generate_hierarchy(2);
  CHECK(levels[0].field == FrenetField::tangent());
  CHECK(levels[0].tau_flow == tau("t1"));
  CHECK(levels[0].k_flow == parse("k1", Generator::Kappa));
  CHECK(levels[1].field == FrenetField::normal());
  CHECK(levels[1].tau_flow == tau("t2 + 2*t*t1"));
  CHECK(levels[1].k_flow == parse("k2 + G*k", Generator::Kappa));
}

TEST_CASE("eq37 flow") {
  CHECK(eq37_flow(tau("t")) == tau("t3 + 3*t*t2 + 3*t1^2 + G*t1 + 3*t^2*t1"));
  CHECK(eq37_flow(zero()).is_zero());
  FrenetField v(zero(), tau("t1"), zero());
  CHECK(eq37_flow(tau("t1")) == pnf::geometry::torsion_variation(v));
  // Needs zero constant term.
  CHECK_THROWS_AS(eq37_flow(tau("1")), Error);
}

TEST_CASE("eq37 agrees with the torsion variation on random P0 elements") {
  Rng rng(21);
  for (int i = 0; i < 15; ++i) {
    DiffPoly g = random_poly(rng, Generator::Tau, 3, 3, 3, /*zero_constant=*/true);
    FrenetField v(zero(), g, zero());
    CHECK(eq37_flow(g) == pnf::geometry::torsion_variation(v));
  }
}

TEST_CASE("r-chain reproduces the hierarchy at G = 0") {
  auto levels = generate_hierarchy(6);
  auto r = RecursionOperator::burgers();
  DiffPoly chain = tau("t1");
  for (int n = 1; n <= 5; ++n) {
    chain = apply(r, chain);
    CHECK(chain == levels[n].tau_flow.substitute_g(Rational(0)));
  }
  // With G on, the chain and the hierarchy part ways at level 2.
  CHECK(apply(r, levels[1].tau_flow) != levels[2].tau_flow);
}

TEST_CASE("pairwise commutation of the printed flows") {
  auto levels = generate_hierarchy(6);
  for (size_t i = 0; i < levels.size(); ++i)
    for (size_t j = i + 1; j < levels.size(); ++j)
      CHECK(commutator(levels[i].tau_flow, levels[j].tau_flow).is_zero());
}

TEST_CASE("every flow is a total derivative") {
  for (const auto& lvl : generate_hierarchy(6)) {
    DiffPoly g = pnf::diffalg::antiderivative(lvl.tau_flow);
    CHECK(total_derivative(g) == lvl.tau_flow);
  }
}

TEST_CASE("symmetry test") {
  DiffPoly burgers = tau("t2 + 2*t*t1");
  CHECK(is_symmetry(burgers, tau("t1")).ok);
  CHECK(is_symmetry(burgers, burgers).ok);
  auto bad = is_symmetry(burgers, tau("t^2"));
  CHECK_FALSE(bad.ok);
  CHECK(bad.residual == tau("-2*t1^2 - 2*t^2*t1"));
}

TEST_CASE("renderings") {
  auto levels = generate_hierarchy(2);
  std::string json = hierarchy_json(levels);
  CHECK(json.find("\"tau_flow\"") != std::string::npos);
  CHECK(json.find("t2 + 2*t*t1") != std::string::npos);
  std::string table = hierarchy_table(levels);
  CHECK(table.find("V_n(tau)") != std::string::npos);
  CHECK(field_label(levels[0].field) == "T");
  CHECK(field_label(levels[1].field) == "N");
  auto more = generate_hierarchy(3);
  CHECK(field_label(more[2].field) == "(t)*N");
}

TEST_CASE("deep hierarchy stays consistent") {
  auto levels = generate_hierarchy(8);
  // g_{n+1} = g_n' + tau g_n for the printed range and beyond.
  for (size_t n = 2; n + 1 < levels.size(); ++n) {
    DiffPoly expect = total_derivative(levels[n].field.g) +
                      tau("t") * levels[n].field.g;
    CHECK(levels[n + 1].field.g == expect);
  }
  // k flows keep the pattern k^(n+1) + G k^(n-1).
  for (size_t n = 1; n < levels.size(); ++n) {
    DiffPoly expect =
        parse(("k" + std::to_string(n + 1) + " + G*k" +
               (n >= 2 ? std::to_string(n - 1) : "")).c_str(),
              Generator::Kappa);
    CHECK(levels[n].k_flow == expect);
  }
}
