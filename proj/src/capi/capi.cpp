#include "pnf/pnf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "diffalg/parse.hpp"
#include "hierarchy/hierarchy.hpp"
#include "numerics/checks.hpp"
#include "numerics/evolution.hpp"
#include "numerics/frames.hpp"
#include "verify/verify.hpp"

using pnf::Error;
using pnf::ErrorCode;
using pnf::Rational;
using pnf::diffalg::Coefficient;
using pnf::diffalg::DiffPoly;
using pnf::diffalg::Generator;
using pnf::geometry::FrenetField;
using pnf::geometry::ParallelField;

namespace num = pnf::numerics;

struct pnf_poly {
  DiffPoly value;
};
struct pnf_field {
  FrenetField value;
};
struct pnf_pfield {
  ParallelField value;
};

namespace {

thread_local std::string g_last_error;

pnf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return PNF_ERROR_PARSE;
    case ErrorCode::GeneratorMismatch: return PNF_ERROR_GENERATOR_MISMATCH;
    case ErrorCode::NotTotalDerivative: return PNF_ERROR_NOT_TOTAL_DERIVATIVE;
    case ErrorCode::InvalidField: return PNF_ERROR_INVALID_FIELD;
    case ErrorCode::InvalidArgument: return PNF_ERROR_INVALID_ARGUMENT;
    case ErrorCode::StabilityViolation: return PNF_ERROR_STABILITY;
    case ErrorCode::GridMismatch: return PNF_ERROR_GRID_MISMATCH;
    case ErrorCode::NonPositiveSample: return PNF_ERROR_NON_POSITIVE_SAMPLE;
    case ErrorCode::StepMismatch: return PNF_ERROR_STEP_MISMATCH;
    case ErrorCode::InvalidInitialFrame: return PNF_ERROR_INVALID_INITIAL_FRAME;
    case ErrorCode::Overflow: return PNF_ERROR_OVERFLOW;
    case ErrorCode::Internal: return PNF_ERROR_INTERNAL;
  }
  return PNF_ERROR_INTERNAL;
}

template <typename Fn>
pnf_status guard(Fn&& fn) {
  try {
    fn();
    return PNF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PNF_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PNF_ERROR_INTERNAL;
  }
}

pnf_status invalid(const char* msg) {
  g_last_error = msg;
  return PNF_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<double> to_times(const double* times, size_t ntimes) {
  return std::vector<double>(times, times + ntimes);
}

num::SampledField make_grid(const double* v, size_t n, double s0, double ds,
                            bool periodic) {
  num::SampledField f;
  f.s0 = s0;
  f.ds = ds;
  f.periodic = periodic;
  f.samples.assign(v, v + n);
  return f;
}

void pack_frame(const num::FrameState& fs, double* out) {
  for (int i = 0; i < 4; ++i) out[i] = fs.gamma[i];
  for (int i = 0; i < 4; ++i) out[4 + i] = fs.T[i];
  for (int i = 0; i < 4; ++i) out[8 + i] = fs.N[i];
  for (int i = 0; i < 4; ++i) out[12 + i] = fs.B[i];
}

num::FrameState unpack_frame(const double* in) {
  num::FrameState fs;
  for (int i = 0; i < 4; ++i) fs.gamma[i] = in[i];
  for (int i = 0; i < 4; ++i) fs.T[i] = in[4 + i];
  for (int i = 0; i < 4; ++i) fs.N[i] = in[8 + i];
  for (int i = 0; i < 4; ++i) fs.B[i] = in[12 + i];
  return fs;
}

std::vector<num::FrameState> unpack_curve(const double* in, size_t n) {
  std::vector<num::FrameState> curve(n);
  for (size_t i = 0; i < n; ++i) curve[i] = unpack_frame(in + 16 * i);
  return curve;
}

}  // namespace

extern "C" {

const char* pnf_version(void) { return "0.1.0"; }

const char* pnf_status_name(pnf_status status) {
  switch (status) {
    case PNF_OK: return "ok";
    case PNF_ERROR_PARSE: return "parse-error";
    case PNF_ERROR_GENERATOR_MISMATCH: return "generator-mismatch";
    case PNF_ERROR_NOT_TOTAL_DERIVATIVE: return "not-total-derivative";
    case PNF_ERROR_INVALID_FIELD: return "invalid-field";
    case PNF_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case PNF_ERROR_STABILITY: return "stability-violation";
    case PNF_ERROR_GRID_MISMATCH: return "grid-mismatch";
    case PNF_ERROR_NON_POSITIVE_SAMPLE: return "non-positive-sample";
    case PNF_ERROR_STEP_MISMATCH: return "step-mismatch";
    case PNF_ERROR_INVALID_INITIAL_FRAME: return "invalid-initial-frame";
    case PNF_ERROR_OVERFLOW: return "overflow";
    case PNF_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* pnf_last_error(void) { return g_last_error.c_str(); }

void pnf_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

pnf_status pnf_poly_parse(const char* text, pnf_generator gen, pnf_poly** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] {
    std::optional<Generator> expect;
    if (gen == PNF_GENERATOR_TAU) expect = Generator::Tau;
    if (gen == PNF_GENERATOR_KAPPA) expect = Generator::Kappa;
    *out = new pnf_poly{pnf::diffalg::parse(text, expect)};
  });
}

pnf_status pnf_poly_format(const pnf_poly* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] { *out = dup_string(pnf::diffalg::format(p->value)); });
}

pnf_status pnf_poly_clone(const pnf_poly* p, pnf_poly** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] { *out = new pnf_poly{p->value}; });
}

void pnf_poly_free(pnf_poly* p) { delete p; }

pnf_generator pnf_poly_generator(const pnf_poly* p) {
  return p && p->value.generator() == Generator::Kappa ? PNF_GENERATOR_KAPPA
                                                       : PNF_GENERATOR_TAU;
}

int pnf_poly_is_zero(const pnf_poly* p) { return p && p->value.is_zero() ? 1 : 0; }

int pnf_poly_equal(const pnf_poly* a, const pnf_poly* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

#define PNF_BINARY_OP(name, expr)                                        \
  pnf_status name(const pnf_poly* a, const pnf_poly* b, pnf_poly** out) { \
    if (!a || !b || !out) return invalid("null argument");               \
    return guard([&] { *out = new pnf_poly{expr}; });                    \
  }

PNF_BINARY_OP(pnf_poly_add, a->value + b->value)
PNF_BINARY_OP(pnf_poly_sub, a->value - b->value)
PNF_BINARY_OP(pnf_poly_mul, a->value * b->value)
PNF_BINARY_OP(pnf_poly_evolution_derivation,
              pnf::diffalg::evolution_derivation(a->value, b->value))
PNF_BINARY_OP(pnf_poly_frechet, pnf::diffalg::frechet(a->value, b->value))
PNF_BINARY_OP(pnf_poly_commutator, pnf::diffalg::commutator(a->value, b->value))
#undef PNF_BINARY_OP

pnf_status pnf_poly_neg(const pnf_poly* a, pnf_poly** out) {
  if (!a || !out) return invalid("null argument");
  return guard([&] { *out = new pnf_poly{-a->value}; });
}

pnf_status pnf_poly_total_derivative(const pnf_poly* p, pnf_poly** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] { *out = new pnf_poly{pnf::diffalg::total_derivative(p->value)}; });
}

pnf_status pnf_poly_variational_derivative(const pnf_poly* p, pnf_poly** out) {
  if (!p || !out) return invalid("null argument");
  return guard(
      [&] { *out = new pnf_poly{pnf::diffalg::variational_derivative(p->value)}; });
}

pnf_status pnf_poly_antiderivative(const pnf_poly* p, pnf_poly** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] { *out = new pnf_poly{pnf::diffalg::antiderivative(p->value)}; });
}

pnf_status pnf_poly_substitute_g(const pnf_poly* p, long long num, long long den,
                                 pnf_poly** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] { *out = new pnf_poly{p->value.substitute_g(Rational(num, den))}; });
}

pnf_status pnf_poly_eval(const pnf_poly* p, const double* jets, size_t njets,
                         double g, double* out) {
  if (!p || !out || (njets > 0 && !jets)) return invalid("null argument");
  return guard([&] { *out = p->value.eval({jets, njets}, g); });
}

/* ------------------------------------------------------------------ */

pnf_status pnf_field_new(const pnf_poly* f, const pnf_poly* g, const pnf_poly* h,
                         pnf_field** out) {
  if (!f || !g || !h || !out) return invalid("null argument");
  return guard(
      [&] { *out = new pnf_field{FrenetField(f->value, g->value, h->value)}; });
}

pnf_status pnf_field_parse(const char* triple, pnf_field** out) {
  if (!triple || !out) return invalid("null argument");
  return guard([&] {
    std::string s(triple);
    std::string parts[3];
    size_t start = 0;
    int slot = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == ';') {
        if (slot > 2) throw Error(ErrorCode::Parse, "field needs exactly f;g;h");
        parts[slot++] = s.substr(start, i - start);
        start = i + 1;
      }
    }
    if (slot != 3) throw Error(ErrorCode::Parse, "field needs exactly f;g;h");
    DiffPoly comp[3];
    for (int i = 0; i < 3; ++i) {
      std::string text = parts[i];
      bool blank = text.find_first_not_of(" \t") == std::string::npos;
      comp[i] = blank ? DiffPoly(Generator::Tau)
                      : pnf::diffalg::parse(text, Generator::Tau);
    }
    *out = new pnf_field{FrenetField(comp[0], comp[1], comp[2])};
  });
}

pnf_status pnf_field_component(const pnf_field* v, int index, pnf_poly** out) {
  if (!v || !out || index < 0 || index > 2) return invalid("bad component index");
  return guard([&] {
    const DiffPoly* c[3] = {&v->value.f, &v->value.g, &v->value.h};
    *out = new pnf_poly{*c[index]};
  });
}

void pnf_field_free(pnf_field* v) { delete v; }

int pnf_field_is_evolution(const pnf_field* v) {
  return v && v->value.is_evolution() ? 1 : 0;
}

pnf_status pnf_field_variation(const pnf_field* v, pnf_poly** rho, pnf_poly** phi,
                               pnf_poly** psi, pnf_poly** alpha) {
  if (!v || !rho || !phi || !psi || !alpha) return invalid("null argument");
  return guard([&] {
    auto var = pnf::geometry::variation_coefficients(v->value);
    *rho = new pnf_poly{var.rho};
    *phi = new pnf_poly{var.phi};
    *psi = new pnf_poly{var.psi};
    *alpha = new pnf_poly{var.alpha};
  });
}

pnf_status pnf_field_tangency(const pnf_field* v, int* pseudo_null_ok,
                              int* arclength_ok) {
  if (!v || !pseudo_null_ok || !arclength_ok) return invalid("null argument");
  return guard([&] {
    auto rep = pnf::geometry::tangency_check(v->value);
    *pseudo_null_ok = rep.pseudo_null_ok ? 1 : 0;
    *arclength_ok = rep.arclength_ok ? 1 : 0;
  });
}

pnf_status pnf_field_torsion_variation(const pnf_field* v, pnf_poly** out) {
  if (!v || !out) return invalid("null argument");
  return guard(
      [&] { *out = new pnf_poly{pnf::geometry::torsion_variation(v->value)}; });
}

pnf_status pnf_field_frame_derivation(const pnf_field* v, pnf_poly* out[9]) {
  if (!v || !out) return invalid("null argument");
  return guard([&] {
    auto m = pnf::geometry::frame_derivation(v->value);
    for (int i = 0; i < 9; ++i) out[i] = new pnf_poly{m.m[static_cast<size_t>(i)]};
  });
}

pnf_status pnf_field_derive(const pnf_field* v, const pnf_field* u,
                            pnf_field** out) {
  if (!v || !u || !out) return invalid("null argument");
  return guard(
      [&] { *out = new pnf_field{pnf::geometry::derive_field(v->value, u->value)}; });
}

pnf_status pnf_field_lie_bracket(const pnf_field* a, const pnf_field* b,
                                 pnf_field** out) {
  if (!a || !b || !out) return invalid("null argument");
  return guard(
      [&] { *out = new pnf_field{pnf::geometry::lie_bracket(a->value, b->value)}; });
}

pnf_status pnf_field_curvature_identity(const pnf_field* v1, const pnf_field* v2,
                                        const pnf_field* u, pnf_field** out) {
  if (!v1 || !v2 || !u || !out) return invalid("null argument");
  return guard([&] {
    *out = new pnf_field{
        pnf::geometry::curvature_identity_residual(v1->value, v2->value, u->value)};
  });
}

pnf_status pnf_pfield_new(const pnf_poly* f, const pnf_poly* g, const pnf_poly* h,
                          pnf_pfield** out) {
  if (!f || !g || !h || !out) return invalid("null argument");
  return guard(
      [&] { *out = new pnf_pfield{ParallelField(f->value, g->value, h->value)}; });
}

void pnf_pfield_free(pnf_pfield* v) { delete v; }

pnf_status pnf_pfield_curvature_variation(const pnf_pfield* v, long long d_num,
                                          long long d_den, pnf_poly** out) {
  if (!v || !out) return invalid("null argument");
  return guard([&] {
    Coefficient d{Rational(d_num, d_den)};
    *out = new pnf_poly{pnf::geometry::curvature_variation(v->value, d)};
  });
}

/* ------------------------------------------------------------------ */

pnf_status pnf_burgers_recursion(const pnf_poly* p, pnf_poly** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    auto r = pnf::hierarchy::RecursionOperator::burgers();
    *out = new pnf_poly{pnf::hierarchy::apply(r, p->value)};
  });
}

pnf_status pnf_eq37_flow(const pnf_poly* g, pnf_poly** out) {
  if (!g || !out) return invalid("null argument");
  return guard([&] { *out = new pnf_poly{pnf::hierarchy::eq37_flow(g->value)}; });
}

pnf_status pnf_is_symmetry(const pnf_poly* flow, const pnf_poly* candidate,
                           int* ok, pnf_poly** residual) {
  if (!flow || !candidate || !ok) return invalid("null argument");
  return guard([&] {
    auto res = pnf::hierarchy::is_symmetry(flow->value, candidate->value);
    *ok = res.ok ? 1 : 0;
    if (residual) *residual = new pnf_poly{res.residual};
  });
}

pnf_status pnf_hierarchy_json(int levels, char** out) {
  if (!out) return invalid("null argument");
  return guard([&] {
    *out = dup_string(
        pnf::hierarchy::hierarchy_json(pnf::hierarchy::generate_hierarchy(levels)));
  });
}

pnf_status pnf_hierarchy_table(int levels, char** out) {
  if (!out) return invalid("null argument");
  return guard([&] {
    *out = dup_string(
        pnf::hierarchy::hierarchy_table(pnf::hierarchy::generate_hierarchy(levels)));
  });
}

pnf_status pnf_hierarchy_check(char** diagnostics) {
  return guard([&] {
    auto got = pnf::hierarchy::generate_hierarchy(5);
    const auto& ref = pnf::hierarchy::reference_hierarchy();
    std::string gj = pnf::hierarchy::hierarchy_json(got);
    std::string rj = pnf::hierarchy::hierarchy_json(ref);
    if (gj != rj)
      throw Error(ErrorCode::Internal,
                  "hierarchy diverges from the reference transcription");
    if (diagnostics) *diagnostics = dup_string("hierarchy matches the reference");
  });
}

/* ------------------------------------------------------------------ */

pnf_status pnf_default_frame(double g_curv, int* dim, double frame[16]) {
  if (!frame) return invalid("null argument");
  return guard([&] {
    auto metric = num::AmbientMetric::for_curvature(g_curv);
    if (dim) *dim = metric.dim;
    pack_frame(num::default_frame(metric), frame);
  });
}

pnf_status pnf_metric_signs(double g_curv, int* dim, double signs[4]) {
  if (!signs) return invalid("null argument");
  return guard([&] {
    auto metric = num::AmbientMetric::for_curvature(g_curv);
    if (dim) *dim = metric.dim;
    for (int i = 0; i < 4; ++i) signs[i] = metric.signs[static_cast<size_t>(i)];
  });
}

pnf_status pnf_reconstruct_curve(const double* tau, size_t n, double s0, double ds,
                                 int periodic, double g_curv, const double* frame0,
                                 double h, double* out) {
  if (!tau || !out) return invalid("null argument");
  return guard([&] {
    auto metric = num::AmbientMetric::for_curvature(g_curv);
    auto grid = make_grid(tau, n, s0, ds, periodic != 0);
    num::FrameState init =
        frame0 ? unpack_frame(frame0) : num::default_frame(metric);
    auto curve = num::reconstruct_curve(grid, metric, init, h);
    for (size_t i = 0; i < curve.size(); ++i) pack_frame(curve[i], out + 16 * i);
  });
}

namespace {

pnf_status run_solver(const double* u0, size_t n, double s0, double ds, double dt,
                      const double* times, size_t ntimes, double* out,
                      const num::ParabolicRhs& rhs) {
  if (!u0 || !times || !out) return invalid("null argument");
  return guard([&] {
    auto grid = make_grid(u0, n, s0, ds, true);
    auto run = num::solve_parabolic(grid, rhs, dt, to_times(times, ntimes));
    for (size_t t = 0; t < run.fields.size(); ++t)
      std::memcpy(out + t * n, run.fields[t].samples.data(), n * sizeof(double));
  });
}

}  // namespace

pnf_status pnf_solve_burgers(const double* u0, size_t n, double s0, double ds,
                             double dt, const double* times, size_t ntimes,
                             double* out) {
  return run_solver(u0, n, s0, ds, dt, times, ntimes, out,
                    num::ParabolicRhs{1.0, 2.0, 0.0, 0.0, 2});
}

pnf_status pnf_solve_burgers_classic(const double* u0, size_t n, double x0,
                                     double dx, double dt, const double* times,
                                     size_t ntimes, double* out) {
  return run_solver(u0, n, x0, dx, dt, times, ntimes, out,
                    num::ParabolicRhs{1.0, 1.0, 0.0, 0.0, 2});
}

pnf_status pnf_solve_heat(const double* k0, size_t n, double s0, double ds,
                          double g_curv, double d, double dt, const double* times,
                          size_t ntimes, double* out) {
  return run_solver(k0, n, s0, ds, dt, times, ntimes, out,
                    num::ParabolicRhs{1.0, 0.0, 0.0, g_curv + d, 2});
}

pnf_status pnf_hopf_cole(const double* k, size_t n, double ds, int periodic,
                         double* tau_out) {
  if (!k || !tau_out) return invalid("null argument");
  return guard([&] {
    auto grid = make_grid(k, n, 0.0, ds, periodic != 0);
    auto tau = num::hopf_cole(grid);
    std::memcpy(tau_out, tau.samples.data(), n * sizeof(double));
  });
}

pnf_status pnf_inverse_hopf_cole(const double* tau, size_t n, double ds,
                                 int periodic, double c, double* k_out) {
  if (!tau || !k_out) return invalid("null argument");
  return guard([&] {
    auto grid = make_grid(tau, n, 0.0, ds, periodic != 0);
    auto k = num::inverse_hopf_cole(grid, c);
    std::memcpy(k_out, k.samples.data(), n * sizeof(double));
  });
}

pnf_status pnf_evolve_filament(const double* tau0, size_t n, double s0, double ds,
                               double g_curv, double dt, const double* times,
                               size_t ntimes, double* tau_out, double* curves_out) {
  if (!tau0 || !times || !tau_out || !curves_out) return invalid("null argument");
  return guard([&] {
    auto grid = make_grid(tau0, n, s0, ds, true);
    auto run = num::evolve_filament(grid, g_curv, dt, to_times(times, ntimes));
    for (size_t t = 0; t < run.snapshots.size(); ++t) {
      const auto& snap = run.snapshots[t];
      std::memcpy(tau_out + t * n, snap.tau.samples.data(), n * sizeof(double));
      for (size_t i = 0; i < n; ++i)
        pack_frame(snap.curve[i], curves_out + (t * n + i) * 16);
    }
  });
}

pnf_status pnf_cylinder_check(const double* curve, const double* k, size_t n,
                              double g_curv, double* parallelism_residual,
                              double* planarity_residual) {
  if (!curve || !k || !parallelism_residual || !planarity_residual)
    return invalid("null argument");
  return guard([&] {
    auto metric = num::AmbientMetric::for_curvature(g_curv);
    auto kf = make_grid(k, n, 0.0, 1.0, false);
    auto rep = num::cylinder_check(unpack_curve(curve, n), kf, metric);
    *parallelism_residual = rep.parallelism_residual;
    *planarity_residual = rep.planarity_residual;
  });
}

pnf_status pnf_parallel_frame_check(const double* curve, const double* k, size_t n,
                                    double ds, double g_curv, double* xi_residual,
                                    double* eta_residual) {
  if (!curve || !k || !xi_residual || !eta_residual) return invalid("null argument");
  return guard([&] {
    auto metric = num::AmbientMetric::for_curvature(g_curv);
    auto kf = make_grid(k, n, 0.0, ds, false);
    auto rep = num::parallel_frame_samples(unpack_curve(curve, n), kf, metric);
    *xi_residual = rep.xi_residual;
    *eta_residual = rep.eta_residual;
  });
}

pnf_status pnf_burgers_gauge_check(const double* u_before, const double* u_mid,
                                   const double* u_after, size_t n, double x0,
                                   double dx, int periodic, double t_before,
                                   double t_after, double a, double b,
                                   double* max_residual) {
  if (!u_before || !u_mid || !u_after || !max_residual)
    return invalid("null argument");
  return guard([&] {
    num::EvolutionRun run;
    run.times = {t_before, 0.5 * (t_before + t_after), t_after};
    run.fields.push_back(make_grid(u_before, n, x0, dx, periodic != 0));
    run.fields.push_back(make_grid(u_mid, n, x0, dx, periodic != 0));
    run.fields.push_back(make_grid(u_after, n, x0, dx, periodic != 0));
    *max_residual = num::burgers_gauge_residual(run, a, b);
  });
}

/* ------------------------------------------------------------------ */

pnf_status pnf_verify(unsigned flags, const char* format, char** report,
                      int* all_passed) {
  return guard([&] {
    pnf::verify::VerifyOptions opts;
    opts.symbolic = (flags & PNF_VERIFY_SYMBOLIC) != 0;
    opts.numeric = (flags & PNF_VERIFY_NUMERIC) != 0;
    opts.inject_eq21_sign_flip = (flags & PNF_VERIFY_INJECT_EQ21_SIGN_FLIP) != 0;
    if (!opts.symbolic && !opts.numeric) {
      opts.symbolic = true;
      opts.numeric = true;
    }
    auto rep = pnf::verify::run_verify(opts);
    if (report) {
      std::string text = (format && std::string(format) == "table")
                             ? pnf::verify::report_table(rep)
                             : pnf::verify::report_json(rep);
      *report = dup_string(text);
    }
    if (all_passed) *all_passed = rep.all_pass ? 1 : 0;
  });
}

}  // extern "C"
