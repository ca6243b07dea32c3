#ifndef PNF_DIFFALG_DIFFPOLY_HPP
#define PNF_DIFFALG_DIFFPOLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "support/error.hpp"
#include "support/rational.hpp"

namespace pnf::diffalg {

/// Which generator the polynomial ring is built over. Values in the TAU
/// ring are polynomials in the pseudo-torsion and its derivatives; KAPPA
/// is the analogous ring for the pseudo-curvature. Arithmetic never
/// crosses the two.
enum class Generator : std::uint8_t { Tau, Kappa };

inline char generator_letter(Generator g) { return g == Generator::Tau ? 't' : 'k'; }

/// Polynomial in the formal curvature constant G with rational
/// coefficients. These are the scalars of the differential algebra.
class Coefficient {
public:
  Coefficient() = default;
  Coefficient(Rational r) {
    if (!r.is_zero()) terms_.push_back({0, std::move(r)});
  }
  Coefficient(std::int64_t n) : Coefficient(Rational(n)) {}

  static Coefficient g_power(unsigned e, Rational scale = Rational(1)) {
    Coefficient c;
    if (!scale.is_zero()) c.terms_.push_back({e, std::move(scale)});
    return c;
  }
  static Coefficient g() { return g_power(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
  }
  /// True when the value is a plain rational (no G dependence).
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  Rational rational_part() const {
    for (const auto& [e, r] : terms_)
      if (e == 0) return r;
    return Rational(0);
  }

  /// Term list sorted by ascending G-exponent; no zero entries.
  const std::vector<std::pair<unsigned, Rational>>& terms() const { return terms_; }

  Coefficient operator-() const {
    Coefficient c;
    c.terms_.reserve(terms_.size());
    for (const auto& [e, r] : terms_) c.terms_.push_back({e, -r});
    return c;
  }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) {
    return !(a == b);
  }

  /// Evaluate at a rational value of G.
  Rational at_g(const Rational& g) const;
  double eval(double g) const;

private:
  std::vector<std::pair<unsigned, Rational>> terms_;
};

/// Monomial in the jet variables: map from derivative order to a positive
/// exponent, stored sorted by ascending order.
class DiffMonomial {
public:
  DiffMonomial() = default;

  static DiffMonomial variable(unsigned order, unsigned exponent = 1) {
    DiffMonomial m;
    if (exponent > 0) m.exps_.push_back({order, exponent});
    return m;
  }

  bool is_empty() const { return exps_.empty(); }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [o, e] : exps_) d += e;
    return d;
  }
  /// Highest derivative order appearing, or -1 for the empty monomial.
  int top_order() const { return exps_.empty() ? -1 : static_cast<int>(exps_.back().first); }
  unsigned exponent_of(unsigned order) const {
    for (const auto& [o, e] : exps_)
      if (o == order) return e;
    return 0;
  }
  const std::vector<std::pair<unsigned, unsigned>>& exponents() const { return exps_; }

  DiffMonomial with_exponent(unsigned order, unsigned exponent) const;
  friend DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b);

  friend bool operator==(const DiffMonomial& a, const DiffMonomial& b) {
    return a.exps_ == b.exps_;
  }

  /// Canonical order: total degree first, then lexicographic on the
  /// exponent vector indexed by ascending derivative order.
  friend bool operator<(const DiffMonomial& a, const DiffMonomial& b);

private:
  std::vector<std::pair<unsigned, unsigned>> exps_;
};

/// Element of the differential polynomial algebra over one generator.
/// The representation is canonical: no zero coefficients are stored, so
/// structural equality coincides with algebraic equality.
class DiffPoly {
public:
  explicit DiffPoly(Generator gen = Generator::Tau) : gen_(gen) {}

  static DiffPoly zero(Generator gen) { return DiffPoly(gen); }
  static DiffPoly constant(Coefficient c, Generator gen);
  static DiffPoly constant(std::int64_t n, Generator gen) {
    return constant(Coefficient(n), gen);
  }
  /// The jet variable u^(order), e.g. derivative(0) is the generator itself.
  static DiffPoly derivative_var(unsigned order, Generator gen);
  static DiffPoly monomial(DiffMonomial m, Coefficient c, Generator gen);

  Generator generator() const { return gen_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial has no jet dependence (a pure Coefficient).
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
  }
  Coefficient constant_term() const;
  /// Highest derivative order appearing, or -1 for constants.
  int top_order() const;
  /// Degree in the single variable u^(order).
  unsigned degree_in(unsigned order) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<DiffMonomial, Coefficient>& terms() const { return terms_; }

  DiffPoly operator-() const;
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
  DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
  DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }

  friend DiffPoly operator*(const Coefficient& c, const DiffPoly& p);
  friend DiffPoly operator*(const Rational& c, const DiffPoly& p) {
    return Coefficient(c) * p;
  }

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
    return a.gen_ == b.gen_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

  /// Partial derivative with respect to the jet variable u^(order).
  DiffPoly partial(unsigned order) const;

  /// Replace the formal G by a rational value.
  DiffPoly substitute_g(const Rational& g) const;

  /// Evaluate at a numeric jet: jets[m] is the value of u^(m). Jet entries
  /// beyond jets.size() are taken as zero.
  double eval(std::span<const double> jets, double g) const;

  void add_term(DiffMonomial m, Coefficient c);

private:
  Generator gen_;
  std::map<DiffMonomial, Coefficient> terms_;
};

inline void require_same_generator(const DiffPoly& a, const DiffPoly& b) {
  if (a.generator() != b.generator())
    throw Error(ErrorCode::GeneratorMismatch,
                "operands live over different generators");
}

/// Total derivative D = sum u^(m+1) d/du^(m).
DiffPoly total_derivative(const DiffPoly& p);
DiffPoly total_derivative(const DiffPoly& p, unsigned times);

/// Evolution derivation: the unique derivation commuting with D that
/// sends the generator to a. Computes sum_m D^m(a) dp/du^(m).
DiffPoly evolution_derivation(const DiffPoly& a, const DiffPoly& p);

/// Frechet derivative a'[b] = sum_m D^m(b) da/du^(m).
DiffPoly frechet(const DiffPoly& a, const DiffPoly& b);

/// Lie bracket [a, b] = ev_a(b) - ev_b(a).
DiffPoly commutator(const DiffPoly& a, const DiffPoly& b);

/// Euler operator E(p) = sum (-D)^m dp/du^(m). Vanishes exactly on
/// Im(D) + constants.
DiffPoly variational_derivative(const DiffPoly& p);

/// Formal antiderivative normalized to have zero constant term. Throws
/// Error(NotTotalDerivative) when p is not in the image of D.
DiffPoly antiderivative(const DiffPoly& p);

}  // namespace pnf::diffalg

#endif
