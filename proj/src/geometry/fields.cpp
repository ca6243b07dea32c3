#include "geometry/fields.hpp"

namespace pnf::geometry {

using diffalg::evolution_derivation;
using diffalg::total_derivative;

namespace {

const DiffPoly& tau() {
  static const DiffPoly t = DiffPoly::derivative_var(0, Generator::Tau);
  return t;
}

const DiffPoly& big_g() {
  static const DiffPoly g = DiffPoly::constant(Coefficient::g(), Generator::Tau);
  return g;
}

void require_tau(const DiffPoly& p, const char* what) {
  if (p.generator() != Generator::Tau)
    throw Error(ErrorCode::GeneratorMismatch,
                std::string(what) + " must live over the TAU generator");
}

void require_evolution(const FrenetField& v, const char* op) {
  if (!v.is_evolution())
    throw Error(ErrorCode::InvalidField,
                std::string(op) +
                    " requires an evolution field (h = 0, constant f)");
}

}  // namespace

FrenetField::FrenetField(DiffPoly f_, DiffPoly g_, DiffPoly h_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
  require_tau(f, "Frenet component f");
  require_tau(g, "Frenet component g");
  require_tau(h, "Frenet component h");
}

FrenetField FrenetField::tangent() {
  return {DiffPoly::constant(1, Generator::Tau), DiffPoly(Generator::Tau),
          DiffPoly(Generator::Tau)};
}

FrenetField FrenetField::normal() {
  return {DiffPoly(Generator::Tau), DiffPoly::constant(1, Generator::Tau),
          DiffPoly(Generator::Tau)};
}

FrenetField FrenetField::binormal() {
  return {DiffPoly(Generator::Tau), DiffPoly(Generator::Tau),
          DiffPoly::constant(1, Generator::Tau)};
}

FrenetField FrenetField::zero() { return {}; }

FrenetField operator+(const FrenetField& a, const FrenetField& b) {
  return {a.f + b.f, a.g + b.g, a.h + b.h};
}

FrenetField operator-(const FrenetField& a, const FrenetField& b) {
  return {a.f - b.f, a.g - b.g, a.h - b.h};
}

FrenetField operator*(const DiffPoly& s, const FrenetField& v) {
  return {s * v.f, s * v.g, s * v.h};
}

ParallelField::ParallelField(DiffPoly f_, DiffPoly g_, DiffPoly h_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
  if (f.generator() != Generator::Kappa || g.generator() != Generator::Kappa ||
      h.generator() != Generator::Kappa)
    throw Error(ErrorCode::GeneratorMismatch,
                "parallel-frame components must live over the KAPPA generator");
}

VariationData variation_coefficients(const FrenetField& v) {
  VariationData out;
  out.rho = total_derivative(v.f) + v.h;
  out.phi = v.f + total_derivative(v.g) + tau() * v.g;
  out.psi = total_derivative(v.h) - tau() * v.h;
  out.alpha = total_derivative(out.phi) + tau() * out.phi + big_g() * v.g - out.rho;
  return out;
}

TangencyReport tangency_check(const FrenetField& v) {
  TangencyReport r;
  const DiffPoly& t = tau();
  DiffPoly h1 = total_derivative(v.h);
  DiffPoly h2 = total_derivative(h1);
  r.pseudo_null_residual =
      h2 - Rational(2) * (t * h1) +
      (t * t - total_derivative(t) + big_g()) * v.h;
  r.arclength_residual = total_derivative(v.f) + v.h;
  r.pseudo_null_ok = r.pseudo_null_residual.is_zero();
  r.arclength_ok = r.arclength_residual.is_zero();
  return r;
}

DiffPoly torsion_variation(const FrenetField& v) {
  TangencyReport t = tangency_check(v);
  if (!t.ok())
    throw Error(ErrorCode::InvalidField,
                "field does not preserve the pseudo-null character and "
                "arc-length parameter");
  VariationData var = variation_coefficients(v);
  return total_derivative(var.alpha) + var.psi - tau() * var.rho;
}

DiffPoly curvature_variation(const ParallelField& v, const Coefficient& d) {
  if (!v.h.is_zero())
    throw Error(ErrorCode::InvalidField,
                "curvature variation needs h = 0: the antiderivative term "
                "leaves the polynomial algebra otherwise");
  if (!v.f.is_constant())
    throw Error(ErrorCode::InvalidField,
                "curvature variation needs a constant tangential component");
  DiffPoly k1 = DiffPoly::derivative_var(1, Generator::Kappa);
  DiffPoly g_term = DiffPoly::constant(Coefficient::g(), Generator::Kappa) * v.g;
  DiffPoly d_term = DiffPoly::constant(d, Generator::Kappa) *
                    DiffPoly::derivative_var(0, Generator::Kappa);
  return total_derivative(v.g, 2) + v.f * k1 + g_term + d_term;
}

FrameMatrix frame_derivation(const FrenetField& v) {
  require_evolution(v, "frame derivation");
  VariationData var = variation_coefficients(v);
  DiffPoly z(Generator::Tau);
  return FrameMatrix{{
      z, var.phi, var.psi,        // D_V T
      var.psi, var.alpha, z,      // D_V N
      var.phi, z, -var.alpha,     // D_V B
  }};
}

FrenetField derive_field(const FrenetField& v, const FrenetField& u) {
  require_evolution(v, "derive_field");
  DiffPoly flow = torsion_variation(v);
  VariationData var = variation_coefficients(v);
  FrenetField out;
  out.f = evolution_derivation(flow, u.f) + var.psi * u.g + var.phi * u.h;
  out.g = evolution_derivation(flow, u.g) + var.phi * u.f + var.alpha * u.g;
  out.h = evolution_derivation(flow, u.h) + var.psi * u.f - var.alpha * u.h;
  return out;
}

FrenetField lie_bracket(const FrenetField& v1, const FrenetField& v2) {
  require_evolution(v1, "lie_bracket");
  require_evolution(v2, "lie_bracket");
  return derive_field(v1, v2) - derive_field(v2, v1);
}

DiffPoly inner(const FrenetField& a, const FrenetField& b) {
  return a.f * b.f - a.g * b.h - a.h * b.g;
}

FrenetField curvature_identity_residual(const FrenetField& v1,
                                        const FrenetField& v2,
                                        const FrenetField& u) {
  FrenetField lhs = derive_field(lie_bracket(v1, v2), u) -
                    derive_field(v1, derive_field(v2, u)) +
                    derive_field(v2, derive_field(v1, u));
  FrenetField rhs = (big_g() * inner(u, v1)) * v2 - (big_g() * inner(u, v2)) * v1;
  return lhs - rhs;
}

}  // namespace pnf::geometry
