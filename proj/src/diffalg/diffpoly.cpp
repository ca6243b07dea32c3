#include "diffalg/diffpoly.hpp"

#include <algorithm>
#include <cmath>

namespace pnf::diffalg {

// ---------------------------------------------------------------------
// Coefficient

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      out.terms_.push_back(*ib++);
    } else {
      Rational r = ia->second + ib->second;
      if (!r.is_zero()) out.terms_.push_back({ia->first, r});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ea, ra] : a.terms_) {
    Coefficient row;
    row.terms_.reserve(b.terms_.size());
    for (const auto& [eb, rb] : b.terms_) row.terms_.push_back({ea + eb, ra * rb});
    out += row;
  }
  return out;
}

Rational Coefficient::at_g(const Rational& g) const {
  Rational acc(0);
  for (const auto& [e, r] : terms_) {
    Rational p(1);
    for (unsigned i = 0; i < e; ++i) p *= g;
    acc += r * p;
  }
  return acc;
}

double Coefficient::eval(double g) const {
  double acc = 0.0;
  for (const auto& [e, r] : terms_) acc += r.to_double() * std::pow(g, e);
  return acc;
}

// ---------------------------------------------------------------------
// DiffMonomial

DiffMonomial DiffMonomial::with_exponent(unsigned order, unsigned exponent) const {
  DiffMonomial out;
  out.exps_.reserve(exps_.size() + 1);
  bool placed = false;
  for (const auto& [o, e] : exps_) {
    if (o == order) {
      if (exponent > 0) out.exps_.push_back({o, exponent});
      placed = true;
    } else {
      if (!placed && o > order && exponent > 0) {
        out.exps_.push_back({order, exponent});
        placed = true;
      }
      out.exps_.push_back({o, e});
    }
  }
  if (!placed && exponent > 0) out.exps_.push_back({order, exponent});
  return out;
}

DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b) {
  DiffMonomial out;
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
      out.exps_.push_back(*ia++);
    } else if (ia == a.exps_.end() || ib->first < ia->first) {
      out.exps_.push_back(*ib++);
    } else {
      out.exps_.push_back({ia->first, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool operator<(const DiffMonomial& a, const DiffMonomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Lexicographic on the exponent vector indexed by ascending order.
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() && ib != b.exps_.end()) {
    if (ia->first != ib->first) {
      // The monomial owning the lower-order variable has the larger
      // exponent at the first differing index.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.exps_.end() && ib != b.exps_.end();
}

// ---------------------------------------------------------------------
// DiffPoly

DiffPoly DiffPoly::constant(Coefficient c, Generator gen) {
  DiffPoly p(gen);
  p.add_term(DiffMonomial(), std::move(c));
  return p;
}

DiffPoly DiffPoly::derivative_var(unsigned order, Generator gen) {
  DiffPoly p(gen);
  p.add_term(DiffMonomial::variable(order), Coefficient(1));
  return p;
}

DiffPoly DiffPoly::monomial(DiffMonomial m, Coefficient c, Generator gen) {
  DiffPoly p(gen);
  p.add_term(std::move(m), std::move(c));
  return p;
}

void DiffPoly::add_term(DiffMonomial m, Coefficient c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient DiffPoly::constant_term() const {
  auto it = terms_.find(DiffMonomial());
  return it == terms_.end() ? Coefficient() : it->second;
}

int DiffPoly::top_order() const {
  int top = -1;
  for (const auto& [m, c] : terms_) top = std::max(top, m.top_order());
  return top;
}

unsigned DiffPoly::degree_in(unsigned order) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(order));
  return d;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out(gen_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  require_same_generator(a, b);
  DiffPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
  require_same_generator(a, b);
  DiffPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  require_same_generator(a, b);
  DiffPoly out(a.gen_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

DiffPoly operator*(const Coefficient& c, const DiffPoly& p) {
  DiffPoly out(p.gen_);
  if (c.is_zero()) return out;
  for (const auto& [m, pc] : p.terms_) out.add_term(m, c * pc);
  return out;
}

DiffPoly DiffPoly::partial(unsigned order) const {
  DiffPoly out(gen_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent_of(order);
    if (e == 0) continue;
    out.add_term(m.with_exponent(order, e - 1), Coefficient(Rational(e)) * c);
  }
  return out;
}

DiffPoly DiffPoly::substitute_g(const Rational& g) const {
  DiffPoly out(gen_);
  for (const auto& [m, c] : terms_) out.add_term(m, Coefficient(c.at_g(g)));
  return out;
}

double DiffPoly::eval(std::span<const double> jets, double g) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.eval(g);
    for (const auto& [order, e] : m.exponents()) {
      double x = order < jets.size() ? jets[order] : 0.0;
      for (unsigned i = 0; i < e; ++i) v *= x;
    }
    acc += v;
  }
  return acc;
}

// ---------------------------------------------------------------------
// Derivations

DiffPoly total_derivative(const DiffPoly& p) {
  DiffPoly out(p.generator());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [order, e] : m.exponents()) {
      DiffMonomial bumped =
          m.with_exponent(order, e - 1) * DiffMonomial::variable(order + 1);
      out.add_term(bumped, Coefficient(Rational(e)) * c);
    }
  }
  return out;
}

DiffPoly total_derivative(const DiffPoly& p, unsigned times) {
  DiffPoly out = p;
  for (unsigned i = 0; i < times; ++i) out = total_derivative(out);
  return out;
}

DiffPoly evolution_derivation(const DiffPoly& a, const DiffPoly& p) {
  require_same_generator(a, p);
  DiffPoly out(p.generator());
  int top = p.top_order();
  DiffPoly da = a;
  for (int m = 0; m <= top; ++m) {
    out += da * p.partial(static_cast<unsigned>(m));
    if (m < top) da = total_derivative(da);
  }
  return out;
}

DiffPoly frechet(const DiffPoly& a, const DiffPoly& b) {
  return evolution_derivation(b, a);
}

DiffPoly commutator(const DiffPoly& a, const DiffPoly& b) {
  return evolution_derivation(a, b) - evolution_derivation(b, a);
}

DiffPoly variational_derivative(const DiffPoly& p) {
  DiffPoly out(p.generator());
  int top = p.top_order();
  for (int m = 0; m <= top; ++m) {
    DiffPoly term = total_derivative(p.partial(static_cast<unsigned>(m)),
                                     static_cast<unsigned>(m));
    out += (m % 2 == 0) ? term : -term;
  }
  return out;
}

DiffPoly antiderivative(const DiffPoly& p) {
  const Generator gen = p.generator();
  if (!p.constant_term().is_zero())
    throw Error(ErrorCode::NotTotalDerivative,
                "nonzero constant term has no polynomial antiderivative");
  if (!variational_derivative(p).is_zero())
    throw Error(ErrorCode::NotTotalDerivative,
                "nonzero variational derivative: not a total derivative");

  // Descent: an element of Im(D) is linear in its top jet variable
  // u^(M) with coefficient A free of u^(M); subtracting D of the
  // u^(M-1)-antiderivative of A strictly lowers the top order.
  DiffPoly rest = p;
  DiffPoly acc(gen);
  while (!rest.is_zero()) {
    int top = rest.top_order();
    if (top <= 0)
      throw Error(ErrorCode::NotTotalDerivative,
                  "descent stalled at order zero");
    unsigned M = static_cast<unsigned>(top);
    if (rest.degree_in(M) > 1)
      throw Error(ErrorCode::NotTotalDerivative,
                  "top jet variable occurs nonlinearly");
    DiffPoly a = rest.partial(M);
    // Integrate a with respect to the variable u^(M-1).
    DiffPoly q(gen);
    for (const auto& [m, c] : a.terms()) {
      unsigned e = m.exponent_of(M - 1);
      q.add_term(m.with_exponent(M - 1, e + 1),
                 Coefficient(Rational(1, e + 1)) * c);
    }
    rest -= total_derivative(q);
    acc += q;
  }
  return acc;
}

}  // namespace pnf::diffalg
