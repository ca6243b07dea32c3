#ifndef PNF_VERIFY_RANDGEN_HPP
#define PNF_VERIFY_RANDGEN_HPP

#include <random>

#include "diffalg/diffpoly.hpp"
#include "geometry/fields.hpp"

namespace pnf::verify {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline diffalg::Coefficient random_coefficient(Rng& rng, bool allow_g = true) {
  using diffalg::Coefficient;
  Rational r(pick(rng, -4, 4), pick(rng, 1, 3));
  if (r.is_zero()) r = Rational(1);
  unsigned ge = allow_g && pick(rng, 0, 3) == 0 ? 1 : 0;
  return Coefficient::g_power(ge, r);
}

/// Random differential polynomial with bounded order, total degree and
/// term count. When zero_constant is set the result lies in P_0.
inline diffalg::DiffPoly random_poly(Rng& rng, diffalg::Generator gen,
                                     int max_order, int max_degree,
                                     int max_terms, bool zero_constant,
                                     bool allow_g = true) {
  using diffalg::DiffMonomial;
  using diffalg::DiffPoly;
  DiffPoly p(gen);
  int terms = pick(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int degree = pick(rng, zero_constant ? 1 : 0, max_degree);
    DiffMonomial m;
    for (int d = 0; d < degree; ++d)
      m = m * DiffMonomial::variable(static_cast<unsigned>(pick(rng, 0, max_order)));
    p.add_term(m, random_coefficient(rng, allow_g));
  }
  if (zero_constant && !p.constant_term().is_zero())
    p -= DiffPoly::constant(p.constant_term(), gen);
  if (p.is_zero()) p = DiffPoly::derivative_var(0, gen);
  return p;
}

/// Random evolution field: constant tangential part, polynomial normal
/// part, vanishing binormal part.
inline geometry::FrenetField random_evolution_field(Rng& rng, int max_order = 2,
                                                    int max_degree = 2,
                                                    int max_terms = 3) {
  using diffalg::DiffPoly;
  using diffalg::Generator;
  DiffPoly f = DiffPoly::constant(random_coefficient(rng), Generator::Tau);
  if (pick(rng, 0, 2) == 0) f = DiffPoly(Generator::Tau);
  DiffPoly g = random_poly(rng, Generator::Tau, max_order, max_degree, max_terms,
                           /*zero_constant=*/false);
  return geometry::FrenetField(f, g, DiffPoly(Generator::Tau));
}

}  // namespace pnf::verify

#endif
