#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "diffalg/diffpoly.hpp"
#include "diffalg/parse.hpp"
#include "verify/randgen.hpp"

using namespace pnf::diffalg;
using pnf::Error;
using pnf::ErrorCode;
using pnf::Rational;
using pnf::verify::random_poly;
using pnf::verify::Rng;

namespace {
DiffPoly tau(const char* text) { return parse(text, Generator::Tau); }
}

TEST_CASE("total derivative basics") {
  CHECK(total_derivative(tau("t")) == tau("t1"));
  CHECK(total_derivative(tau("t*t1")) == tau("t1^2 + t*t2"));
  CHECK(total_derivative(tau("t1 + t^2")) == tau("t2 + 2*t*t1"));
  CHECK(total_derivative(tau("5")).is_zero());
  CHECK(total_derivative(tau("G")).is_zero());
}

TEST_CASE("evolution derivation") {
  // ev_a(u) = a for any a.
  CHECK(evolution_derivation(tau("t^2"), tau("t")) == tau("t^2"));
  // a = u' recovers the total derivative.
  CHECK(evolution_derivation(tau("t1"), tau("t*t2")) ==
        total_derivative(tau("t*t2")));
  CHECK(evolution_derivation(tau("t1"), tau("t*t2")) == tau("t1*t2 + t*t3"));
  // ev_a(u'') = D^2(a).
  CHECK(evolution_derivation(tau("t^2"), tau("t2")) == tau("2*t1^2 + 2*t*t2"));
}

TEST_CASE("frechet derivative") {
  // Linearization of the Burgers flow at b = tau.
  CHECK(frechet(tau("t2 + 2*t*t1"), tau("t")) == tau("t2 + 4*t*t1"));
  CHECK(frechet(tau("t"), tau("t*t1")) == tau("t*t1"));
  CHECK(frechet(tau("t^2"), tau("t1")) == tau("2*t*t1"));
  // [a, b] = b'[a] - a'[b] agrees with the commutator.
  DiffPoly a = tau("t2 + t*t1"), b = tau("t^3 + t1");
  CHECK(frechet(b, a) - frechet(a, b) == commutator(a, b));
}

TEST_CASE("commutator examples") {
  // Autonomy: u' commutes with everything.
  CHECK(commutator(tau("t1"), tau("t*t2")).is_zero());
  CHECK(commutator(tau("t1"), tau("t^4 + t3*t1")).is_zero());
  // Hand-expanded value.
  CHECK(commutator(tau("t2 + 2*t*t1"), tau("t^2")) ==
        tau("-2*t1^2 - 2*t^2*t1"));
  // The first two Burgers flows commute.
  CHECK(commutator(tau("t2 + 2*t*t1"),
                   tau("t3 + 3*t*t2 + 3*t1^2 + G*t1 + 3*t^2*t1"))
            .is_zero());
}

TEST_CASE("variational derivative") {
  CHECK(variational_derivative(tau("t*t1")).is_zero());
  CHECK(variational_derivative(tau("t^2")) == tau("2*t"));
  CHECK(variational_derivative(tau("t1^2")) == tau("-2*t2"));
  CHECK(variational_derivative(tau("G*t")) == tau("G"));
}

TEST_CASE("antiderivative") {
  CHECK(antiderivative(tau("t*t1")) == tau("1/2*t^2"));
  CHECK(antiderivative(tau("t2 + 2*t*t1")) == tau("t1 + t^2"));
  CHECK(antiderivative(DiffPoly(Generator::Tau)).is_zero());

  CHECK_THROWS_AS(antiderivative(tau("t^2")), Error);
  try {
    antiderivative(tau("t^2"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTotalDerivative);
  }
  CHECK_THROWS_AS(antiderivative(tau("1")), Error);
  CHECK_THROWS_AS(antiderivative(tau("t1^2")), Error);
}

TEST_CASE("generator mismatch is a hard error") {
  DiffPoly t = tau("t1");
  DiffPoly k = parse("k1", Generator::Kappa);
  CHECK_THROWS_AS(t + k, Error);
  CHECK_THROWS_AS(commutator(t, k), Error);
  try {
    t* k;
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneratorMismatch);
  }
}

TEST_CASE("constant term and membership in P0") {
  CHECK(tau("t1 + 3").constant_term() == Coefficient(3));
  CHECK(tau("t1").constant_term().is_zero());
  CHECK(tau("G + t").constant_term() == Coefficient::g());
}

TEST_CASE("substitution and evaluation") {
  DiffPoly p = tau("t3 + 3*t*t2 + 3*t1^2 + G*t1 + 3*t^2*t1");
  CHECK(p.substitute_g(Rational(0)) == tau("t3 + 3*t*t2 + 3*t1^2 + 3*t^2*t1"));
  CHECK(p.substitute_g(Rational(2)) ==
        tau("t3 + 3*t*t2 + 3*t1^2 + 2*t1 + 3*t^2*t1"));

  double jets[4] = {2.0, 3.0, 5.0, 7.0};  // u, u', u'', u'''
  // 7 + 3*2*5 + 3*9 + 1*3 + 3*4*3 = 7 + 30 + 27 + 3 + 36 = 103
  CHECK(p.eval({jets, 4}, 1.0) == doctest::Approx(103.0));
  CHECK(tau("1/2*t1").eval({jets, 4}, 0.0) == doctest::Approx(1.5));
}

TEST_CASE("derivation properties on random polynomials") {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    DiffPoly p = random_poly(rng, Generator::Tau, 3, 3, 3, false);
    DiffPoly q = random_poly(rng, Generator::Tau, 3, 3, 3, false);
    DiffPoly a = random_poly(rng, Generator::Tau, 2, 2, 3, false);
    DiffPoly b = random_poly(rng, Generator::Tau, 2, 2, 3, false);

    // D is a derivation.
    CHECK(total_derivative(p * q) ==
          total_derivative(p) * q + p * total_derivative(q));
    // ev_a is a derivation.
    CHECK(evolution_derivation(a, p * q) ==
          evolution_derivation(a, p) * q + p * evolution_derivation(a, q));
    // ev_a commutes with D.
    CHECK(evolution_derivation(a, total_derivative(p)) ==
          total_derivative(evolution_derivation(a, p)));
    // [ev_a, ev_b] = ev_[a,b].
    CHECK(evolution_derivation(commutator(a, b), p) ==
          evolution_derivation(a, evolution_derivation(b, p)) -
              evolution_derivation(b, evolution_derivation(a, p)));
    // E annihilates Im(D).
    CHECK(variational_derivative(total_derivative(p)).is_zero());
  }
}

TEST_CASE("jacobi identity on random triples") {
  Rng rng(43);
  for (int i = 0; i < 25; ++i) {
    DiffPoly a = random_poly(rng, Generator::Tau, 2, 2, 2, false);
    DiffPoly b = random_poly(rng, Generator::Tau, 2, 2, 2, false);
    DiffPoly c = random_poly(rng, Generator::Tau, 2, 2, 2, false);
    DiffPoly jac = commutator(commutator(a, b), c) +
                   commutator(commutator(b, c), a) +
                   commutator(commutator(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("antiderivative round trip on random P0 elements") {
  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    DiffPoly q = random_poly(rng, Generator::Tau, 4, 4, 4, true);
    CHECK(antiderivative(total_derivative(q)) == q);
  }
}

TEST_CASE("canonical form is order independent") {
  DiffPoly a = tau("t2 + 2*t*t1 + G*t1");
  DiffPoly b = tau("G*t1 + 2*t*t1 + t2");
  CHECK(a == b);
  CHECK(format(a) == format(b));
}
