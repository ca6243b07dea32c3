#ifndef PNF_HIERARCHY_HIERARCHY_HPP
#define PNF_HIERARCHY_HIERARCHY_HPP

#include <string>
#include <vector>

#include "geometry/fields.hpp"

namespace pnf::hierarchy {

using diffalg::DiffPoly;
using diffalg::Generator;
using geometry::FrenetField;

/// Formal sum of powers of the total derivative with polynomial
/// coefficients; power -1 denotes the normalized antiderivative. At most
/// one term per power.
struct RecursionOperator {
  struct Term {
    int power;
    DiffPoly coeff;
  };
  std::vector<Term> terms;

  /// The Burgers recursion operator tau' D^{-1} + tau + D.
  static RecursionOperator burgers();
};

/// Apply the operator: sum coeff * D^power(p). The D^{-1} term requires
/// p to be a total derivative with zero constant term and throws
/// Error(NotTotalDerivative) otherwise.
DiffPoly apply(const RecursionOperator& op, const DiffPoly& p);

/// Geometric recursion R(V) = covariant derivative of V along T,
/// restricted to evolution fields: V maps to phi_V N.
FrenetField geometric_recursion_step(const FrenetField& v);

/// Torsion flow through (R^2 + G)(g') for g with zero constant term.
DiffPoly eq37_flow(const DiffPoly& g);

struct HierarchyLevel {
  int n = 0;
  FrenetField field;                 // V_n
  DiffPoly tau_flow{Generator::Tau};
  DiffPoly k_flow{Generator::Kappa};
};

/// Levels 0..levels-1 of the geometric hierarchy: V_0 = T, then repeated
/// geometric recursion; tau flows via the torsion variation, k flows via
/// the curvature variation with d = 0.
std::vector<HierarchyLevel> generate_hierarchy(int levels);

struct SymmetryResult {
  bool ok = false;
  DiffPoly residual{Generator::Tau};
};

/// sigma is a symmetry of u_t = flow iff [flow, sigma] = 0.
SymmetryResult is_symmetry(const DiffPoly& flow, const DiffPoly& sigma);

/// Transcription of the first five printed hierarchy levels, parsed into
/// canonical form. Serves as the golden regression anchor.
const std::vector<HierarchyLevel>& reference_hierarchy();

/// Render as JSON array of {n, field, tau_flow, k_flow} or as an aligned
/// plain-text table.
std::string hierarchy_json(const std::vector<HierarchyLevel>& levels);
std::string hierarchy_table(const std::vector<HierarchyLevel>& levels);

/// Field tag, e.g. "T", "N" or "(t1 + t^2)*N".
std::string field_label(const FrenetField& v);

}  // namespace pnf::hierarchy

#endif
