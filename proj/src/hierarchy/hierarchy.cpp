#include "hierarchy/hierarchy.hpp"

#include <sstream>

#include "diffalg/parse.hpp"
#include "geometry/fields.hpp"
#include "json.hpp"

namespace pnf::hierarchy {

using diffalg::antiderivative;
using diffalg::Coefficient;
using diffalg::commutator;
using diffalg::total_derivative;
using geometry::ParallelField;

RecursionOperator RecursionOperator::burgers() {
  DiffPoly tau = DiffPoly::derivative_var(0, Generator::Tau);
  DiffPoly tau1 = DiffPoly::derivative_var(1, Generator::Tau);
  DiffPoly one = DiffPoly::constant(1, Generator::Tau);
  return RecursionOperator{{{-1, tau1}, {0, tau}, {1, one}}};
}

DiffPoly apply(const RecursionOperator& op, const DiffPoly& p) {
  if (op.terms.empty()) return DiffPoly::zero(p.generator());
  DiffPoly acc(p.generator());
  for (const auto& term : op.terms) {
    if (term.power < 0) {
      acc += term.coeff * antiderivative(p);
    } else {
      acc += term.coeff * total_derivative(p, static_cast<unsigned>(term.power));
    }
  }
  return acc;
}

FrenetField geometric_recursion_step(const FrenetField& v) {
  if (!v.is_evolution())
    throw Error(ErrorCode::InvalidField,
                "geometric recursion requires an evolution field");
  DiffPoly phi = geometry::variation_coefficients(v).phi;
  return FrenetField(DiffPoly(Generator::Tau), phi, DiffPoly(Generator::Tau));
}

DiffPoly eq37_flow(const DiffPoly& g) {
  if (g.generator() != Generator::Tau)
    throw Error(ErrorCode::GeneratorMismatch, "eq37 flow acts on the TAU ring");
  if (!g.constant_term().is_zero())
    throw Error(ErrorCode::InvalidArgument,
                "eq37 flow needs g with zero constant term");
  RecursionOperator r = RecursionOperator::burgers();
  DiffPoly g1 = total_derivative(g);
  DiffPoly big_g = DiffPoly::constant(Coefficient::g(), Generator::Tau);
  return apply(r, apply(r, g1)) + big_g * g1;
}

std::vector<HierarchyLevel> generate_hierarchy(int levels) {
  if (levels < 1)
    throw Error(ErrorCode::InvalidArgument, "hierarchy depth must be >= 1");
  std::vector<HierarchyLevel> out;
  out.reserve(static_cast<std::size_t>(levels));
  FrenetField v = FrenetField::tangent();
  for (int n = 0; n < levels; ++n) {
    HierarchyLevel lvl;
    lvl.n = n;
    lvl.field = v;
    lvl.tau_flow = geometry::torsion_variation(v);
    // In the parallel frame V_0 = T and V_n = k^(n-1) xi for n >= 1.
    ParallelField pv;
    if (n == 0)
      pv.f = DiffPoly::constant(1, Generator::Kappa);
    else
      pv.g = DiffPoly::derivative_var(static_cast<unsigned>(n - 1), Generator::Kappa);
    lvl.k_flow = geometry::curvature_variation(pv);
    out.push_back(std::move(lvl));
    v = geometric_recursion_step(v);
  }
  return out;
}

SymmetryResult is_symmetry(const DiffPoly& flow, const DiffPoly& sigma) {
  SymmetryResult r;
  r.residual = commutator(flow, sigma);
  r.ok = r.residual.is_zero();
  return r;
}

const std::vector<HierarchyLevel>& reference_hierarchy() {
  // Transcribed once from the published listing of the first five
  // members of the geometric, torsion and curvature hierarchies.
  struct Row {
    const char* g;  // N-component of V_n; level 0 is T itself
    const char* tau_flow;
    const char* k_flow;
  };
  static const Row rows[5] = {
      {nullptr, "t1", "k1"},
      {"1", "t2 + 2*t*t1", "k2 + G*k"},
      {"t", "t3 + 3*t*t2 + 3*t1^2 + G*t1 + 3*t^2*t1", "k3 + G*k1"},
      {"t1 + t^2",
       "t4 + 4*t*t3 + G*t2 + 10*t1*t2 + 6*t^2*t2 + 12*t*t1^2 + 2*G*t*t1 + "
       "4*t^3*t1",
       "k4 + G*k2"},
      {"t2 + 3*t*t1 + t^3",
       "t5 + 5*t*t4 + G*t3 + 15*t1*t3 + 10*t^2*t3 + 10*t2^2 + 3*G*t*t2 + "
       "50*t*t1*t2 + 10*t^3*t2 + 15*t1^3 + 3*G*t1^2 + 30*t^2*t1^2 + "
       "3*G*t^2*t1 + 5*t^4*t1",
       "k5 + G*k3"},
  };
  static const std::vector<HierarchyLevel> ref = [] {
    std::vector<HierarchyLevel> v;
    for (int n = 0; n < 5; ++n) {
      HierarchyLevel lvl;
      lvl.n = n;
      if (rows[n].g == nullptr) {
        lvl.field = FrenetField::tangent();
      } else {
        lvl.field = FrenetField(DiffPoly(Generator::Tau),
                                diffalg::parse(rows[n].g, Generator::Tau),
                                DiffPoly(Generator::Tau));
      }
      lvl.tau_flow = diffalg::parse(rows[n].tau_flow, Generator::Tau);
      lvl.k_flow = diffalg::parse(rows[n].k_flow, Generator::Kappa);
      v.push_back(std::move(lvl));
    }
    return v;
  }();
  return ref;
}

std::string field_label(const FrenetField& v) {
  if (v == FrenetField::tangent()) return "T";
  if (v == FrenetField::normal()) return "N";
  if (v.f.is_zero() && v.h.is_zero()) {
    DiffPoly one = DiffPoly::constant(1, Generator::Tau);
    if (v.g == one) return "N";
    return "(" + diffalg::format(v.g) + ")*N";
  }
  return diffalg::format(v.f) + ";" + diffalg::format(v.g) + ";" +
         diffalg::format(v.h);
}

std::string hierarchy_json(const std::vector<HierarchyLevel>& levels) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& lvl : levels) {
    arr.push_back({{"n", lvl.n},
                   {"field", field_label(lvl.field)},
                   {"tau_flow", diffalg::format(lvl.tau_flow)},
                   {"k_flow", diffalg::format(lvl.k_flow)}});
  }
  return arr.dump(2);
}

std::string hierarchy_table(const std::vector<HierarchyLevel>& levels) {
  std::ostringstream os;
  os << "n | V_n | V_n(tau) | V_n(k)\n";
  for (const auto& lvl : levels) {
    os << lvl.n << " | " << field_label(lvl.field) << " | "
       << diffalg::format(lvl.tau_flow) << " | " << diffalg::format(lvl.k_flow)
       << "\n";
  }
  return os.str();
}

}  // namespace pnf::hierarchy
