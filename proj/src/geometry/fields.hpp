#ifndef PNF_GEOMETRY_FIELDS_HPP
#define PNF_GEOMETRY_FIELDS_HPP

#include <array>

#include "diffalg/diffpoly.hpp"

namespace pnf::geometry {

using diffalg::Coefficient;
using diffalg::DiffPoly;
using diffalg::Generator;

/// Vector field along a pseudo-null curve written in the Frenet frame:
/// V = f T + g N + h B, each component a TAU differential polynomial.
struct FrenetField {
  DiffPoly f{Generator::Tau};
  DiffPoly g{Generator::Tau};
  DiffPoly h{Generator::Tau};

  FrenetField() = default;
  FrenetField(DiffPoly f_, DiffPoly g_, DiffPoly h_);

  static FrenetField tangent();   // T
  static FrenetField normal();    // N
  static FrenetField binormal();  // B
  static FrenetField zero();

  /// Evolution fields have vanishing binormal component and constant
  /// tangential component; only the zero polynomial solves the
  /// pseudo-null constraint ODE inside the algebra, so these are exactly
  /// the fields that pass tangency_check symbolically.
  bool is_evolution() const { return h.is_zero() && f.is_constant(); }

  bool operator==(const FrenetField&) const = default;
};

FrenetField operator+(const FrenetField& a, const FrenetField& b);
FrenetField operator-(const FrenetField& a, const FrenetField& b);
FrenetField operator*(const DiffPoly& s, const FrenetField& v);

/// Vector field in the parallel frame {T, xi, eta}, components over KAPPA.
struct ParallelField {
  DiffPoly f{Generator::Kappa};
  DiffPoly g{Generator::Kappa};
  DiffPoly h{Generator::Kappa};

  ParallelField() = default;
  ParallelField(DiffPoly f_, DiffPoly g_, DiffPoly h_);

  bool is_evolution() const { return h.is_zero() && f.is_constant(); }
};

/// The first-variation scalars of a field V:
///   rho   = f' + h
///   phi   = f + g' + tau g
///   psi   = h' - tau h
///   alpha = phi' + tau phi + G g - rho
struct VariationData {
  DiffPoly rho{Generator::Tau};
  DiffPoly phi{Generator::Tau};
  DiffPoly psi{Generator::Tau};
  DiffPoly alpha{Generator::Tau};
};

VariationData variation_coefficients(const FrenetField& v);

struct TangencyReport {
  bool pseudo_null_ok = false;
  bool arclength_ok = false;
  DiffPoly pseudo_null_residual{Generator::Tau};
  DiffPoly arclength_residual{Generator::Tau};
  bool ok() const { return pseudo_null_ok && arclength_ok; }
};

/// Checks h'' - 2 tau h' + (tau^2 - tau' + G) h = 0 and f' + h = 0.
TangencyReport tangency_check(const FrenetField& v);

/// The induced flow of the pseudo-torsion, alpha' + psi - tau rho. For
/// the admissible fields this expands to
///   g''' + 2 tau g'' + (3 tau' + tau^2 + G) g' + (tau'' + 2 tau tau') g
///   + 2 tau f' + tau' f.
/// Throws Error(InvalidField) unless tangency_check passes.
DiffPoly torsion_variation(const FrenetField& v);

/// The induced flow of the pseudo-curvature for an evolution field in
/// the parallel frame: g'' + k' f + G g + d k (f is the constant
/// tangential component, d a constant of integration, default zero).
DiffPoly curvature_variation(const ParallelField& v,
                             const Coefficient& d = Coefficient());

/// Matrix of the derivation D_V on the ordered frame (T, N, B); row i
/// lists the components of D_V applied to the i-th frame vector.
struct FrameMatrix {
  std::array<DiffPoly, 9> m;
  const DiffPoly& at(int row, int col) const { return m[row * 3 + col]; }
};

FrameMatrix frame_derivation(const FrenetField& v);

/// D_V U for an evolution field V and arbitrary U: scalar components
/// move by the evolution derivation attached to V(tau), frame vectors by
/// frame_derivation.
FrenetField derive_field(const FrenetField& v, const FrenetField& u);

/// [V1, V2] = D_{V1} V2 - D_{V2} V1; closed on evolution fields.
FrenetField lie_bracket(const FrenetField& v1, const FrenetField& v2);

/// Residual of the curvature identity
///   D_{[V1,V2]} U - D_{V1} D_{V2} U + D_{V2} D_{V1} U
///     - G (<U,V1> V2 - <U,V2> V1);
/// identically zero when the bracket is consistent with the ambient
/// curvature.
FrenetField curvature_identity_residual(const FrenetField& v1,
                                        const FrenetField& v2,
                                        const FrenetField& u);

/// Pseudo-orthonormal pairing: <T,T> = 1, <N,B> = -1, all else 0.
DiffPoly inner(const FrenetField& a, const FrenetField& b);

}  // namespace pnf::geometry

#endif
