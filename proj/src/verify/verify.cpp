#include "verify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "diffalg/parse.hpp"
#include "hierarchy/hierarchy.hpp"
#include "json.hpp"
#include "numerics/checks.hpp"
#include "numerics/evolution.hpp"
#include "numerics/frames.hpp"
#include "verify/randgen.hpp"

namespace pnf::verify {

using diffalg::antiderivative;
using diffalg::commutator;
using diffalg::Coefficient;
using diffalg::DiffPoly;
using diffalg::Generator;
using diffalg::total_derivative;
using diffalg::variational_derivative;
using geometry::FrenetField;
using hierarchy::generate_hierarchy;
using hierarchy::HierarchyLevel;

namespace num = pnf::numerics;

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

constexpr unsigned long long kSeed = 0x5eedf11a5ull;

CheckResult make_pass(std::string name, std::string group, std::string residual,
                      std::string details = "") {
  return CheckResult{std::move(name), std::move(group), true, std::move(residual),
                     std::move(details)};
}

CheckResult make_fail(std::string name, std::string group, std::string residual,
                      std::string details) {
  return CheckResult{std::move(name), std::move(group), false, std::move(residual),
                     std::move(details)};
}

// Torsion flow evaluated from the variation scalars; the injected sign
// flip turns (tau phi)' + ... into a wrong-sign variant for the
// negative-control fixture.
DiffPoly torsion_flow_fixture(const FrenetField& v, bool flip_sign) {
  if (!flip_sign) return geometry::torsion_variation(v);
  // alpha with the transport term sign flipped and the G g term dropped.
  auto var = geometry::variation_coefficients(v);
  DiffPoly tau = DiffPoly::derivative_var(0, Generator::Tau);
  DiffPoly alpha_flipped = total_derivative(var.phi) - tau * var.phi - var.rho;
  return total_derivative(alpha_flipped) + var.psi - tau * var.rho;
}

// ---------------------------------------------------------------------
// Symbolic checks

CheckResult check_hierarchy_reproduction() {
  const char* name = "hierarchy_reproduction";
  auto got = generate_hierarchy(5);
  const auto& ref = hierarchy::reference_hierarchy();
  for (int n = 0; n < 5; ++n) {
    const auto& g = got[static_cast<std::size_t>(n)];
    const auto& r = ref[static_cast<std::size_t>(n)];
    if (!(g.field == r.field) || g.tau_flow != r.tau_flow || g.k_flow != r.k_flow ||
        diffalg::format(g.tau_flow) != diffalg::format(r.tau_flow) ||
        diffalg::format(g.k_flow) != diffalg::format(r.k_flow))
      return make_fail(name, "symbolic", "level " + std::to_string(n),
                       "generated " + diffalg::format(g.tau_flow) + " expected " +
                           diffalg::format(r.tau_flow));
  }
  return make_pass(name, "symbolic", "exact",
                   "levels 0..4 match the printed listings");
}

CheckResult check_hierarchy_commutation() {
  const char* name = "hierarchy_commutation";
  auto levels = generate_hierarchy(6);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      DiffPoly c = commutator(levels[i].tau_flow, levels[j].tau_flow);
      if (!c.is_zero())
        return make_fail(name, "symbolic",
                         "[" + std::to_string(i) + "," + std::to_string(j) + "]",
                         diffalg::format(c));
    }
  }
  return make_pass(name, "symbolic", "exact", "all pairs 0 <= i < j <= 5 commute");
}

CheckResult check_geometric_bracket() {
  const char* name = "geometric_bracket_vanishing";
  auto levels = generate_hierarchy(5);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      FrenetField b = geometry::lie_bracket(levels[i].field, levels[j].field);
      if (!b.f.is_zero() || !b.g.is_zero() || !b.h.is_zero())
        return make_fail(name, "symbolic",
                         "[" + std::to_string(i) + "," + std::to_string(j) + "]",
                         diffalg::format(b.g));
    }
  }
  return make_pass(name, "symbolic", "exact",
                   "lie bracket vanishes for hierarchy fields 0..4");
}

CheckResult check_eq37_agreement(bool inject) {
  const char* name = "eq37_agreement";
  std::vector<DiffPoly> gs;
  for (const char* s : {"t", "t1", "t^2", "t*t1", "t2 + t^3"})
    gs.push_back(diffalg::parse(s, Generator::Tau));
  Rng rng(kSeed);
  for (int i = 0; i < 10; ++i)
    gs.push_back(random_poly(rng, Generator::Tau, 3, 3, 4, /*zero_constant=*/true));
  for (const auto& g : gs) {
    FrenetField v(DiffPoly(Generator::Tau), g, DiffPoly(Generator::Tau));
    DiffPoly lhs = torsion_flow_fixture(v, inject);
    DiffPoly rhs = hierarchy::eq37_flow(g);
    if (lhs != rhs)
      return make_fail(name, "symbolic", diffalg::format(lhs - rhs),
                       "mismatch for g = " + diffalg::format(g));
  }
  return make_pass(name, "symbolic", "exact",
                   "torsion variation equals (R^2 + G)(g') on 15 fields");
}

CheckResult check_theorem10(bool inject) {
  const char* name = "theorem10_suite";
  Rng rng(kSeed + 1);
  const FrenetField basis[3] = {FrenetField::tangent(), FrenetField::normal(),
                                FrenetField::binormal()};
  for (int round = 0; round < 20; ++round) {
    FrenetField v1 = random_evolution_field(rng);
    FrenetField v2 = random_evolution_field(rng);
    FrenetField v3 = random_evolution_field(rng, 1, 2, 2);

    FrenetField b12 = geometry::lie_bracket(v1, v2);
    if (!b12.is_evolution())
      return make_fail(name, "symbolic", "closure", "bracket left the evolution class");

    DiffPoly lhs = torsion_flow_fixture(b12, inject);
    DiffPoly rhs = commutator(geometry::torsion_variation(v1),
                              geometry::torsion_variation(v2));
    if (lhs != rhs)
      return make_fail(name, "symbolic", diffalg::format(lhs - rhs),
                       "bracket-to-commutator failed in round " +
                           std::to_string(round));

    FrenetField jac = geometry::lie_bracket(b12, v3) +
                      geometry::lie_bracket(geometry::lie_bracket(v2, v3), v1) +
                      geometry::lie_bracket(geometry::lie_bracket(v3, v1), v2);
    if (!jac.f.is_zero() || !jac.g.is_zero() || !jac.h.is_zero())
      return make_fail(name, "symbolic", diffalg::format(jac.g),
                       "Jacobi failed in round " + std::to_string(round));

    for (const auto& u : basis) {
      FrenetField res = geometry::curvature_identity_residual(v1, v2, u);
      if (!res.f.is_zero() || !res.g.is_zero() || !res.h.is_zero())
        return make_fail(name, "symbolic", diffalg::format(res.g),
                         "curvature identity failed in round " +
                             std::to_string(round));
    }
  }
  return make_pass(name, "symbolic", "exact",
                   "closure, homomorphism, Jacobi and curvature identity over "
                   "20 random pairs");
}

CheckResult check_antiderivative_oracle() {
  const char* name = "antiderivative_oracle";
  Rng rng(kSeed + 2);
  for (int i = 0; i < 100; ++i) {
    DiffPoly q = random_poly(rng, Generator::Tau, 4, 4, 4, /*zero_constant=*/true);
    DiffPoly back = antiderivative(total_derivative(q));
    if (back != q)
      return make_fail(name, "symbolic", diffalg::format(back - q),
                       "round trip failed for q = " + diffalg::format(q));
  }
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    DiffPoly p = random_poly(rng, Generator::Tau, 3, 3, 4, /*zero_constant=*/true);
    while (variational_derivative(p).is_zero()) {
      p = random_poly(rng, Generator::Tau, 3, 3, 4, /*zero_constant=*/true);
      if (++rejected > 1000) break;
    }
    try {
      antiderivative(p);
      return make_fail(name, "symbolic", "no exception",
                       "expected NotTotalDerivative for p = " + diffalg::format(p));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotTotalDerivative)
        return make_fail(name, "symbolic", e.what(), "wrong error code");
    }
  }
  return make_pass(name, "symbolic", "exact",
                   "100 exact round trips, 100 rejections");
}

CheckResult check_rchain_g0() {
  const char* name = "rchain_g0";
  auto levels = generate_hierarchy(6);
  auto r = hierarchy::RecursionOperator::burgers();
  DiffPoly chain = DiffPoly::derivative_var(1, Generator::Tau);
  for (int n = 1; n <= 5; ++n) {
    chain = hierarchy::apply(r, chain);
    DiffPoly expected = levels[static_cast<std::size_t>(n)].tau_flow.substitute_g(
        Rational(0));
    if (chain != expected)
      return make_fail(name, "symbolic", diffalg::format(chain - expected),
                       "R-chain diverged at level " + std::to_string(n));
  }
  return make_pass(name, "symbolic", "exact",
                   "five applications of the Burgers operator reproduce the "
                   "G = 0 hierarchy");
}

CheckResult check_flows_total_derivative() {
  const char* name = "flows_total_derivative";
  auto levels = generate_hierarchy(6);
  for (const auto& lvl : levels) {
    try {
      DiffPoly g = antiderivative(lvl.tau_flow);
      if (total_derivative(g) != lvl.tau_flow)
        return make_fail(name, "symbolic", "level " + std::to_string(lvl.n),
                         "antiderivative does not differentiate back");
    } catch (const Error& e) {
      return make_fail(name, "symbolic", "level " + std::to_string(lvl.n), e.what());
    }
  }
  return make_pass(name, "symbolic", "exact",
                   "every hierarchy flow is a total derivative");
}

CheckResult check_parser_roundtrip() {
  const char* name = "parser_roundtrip";
  const auto& corpus = expression_corpus();
  if (corpus.size() < 50)
    return make_fail(name, "symbolic", std::to_string(corpus.size()),
                     "corpus shrank below 50 entries");
  for (const auto& text : corpus) {
    DiffPoly p = diffalg::parse(text);
    std::string canon = diffalg::format(p);
    DiffPoly q = diffalg::parse(canon);
    if (p != q || diffalg::format(q) != canon)
      return make_fail(name, "symbolic", text, "round trip failed");
  }
  return make_pass(name, "symbolic", "exact",
                   std::to_string(corpus.size()) + " expressions round-trip");
}

CheckResult check_alpha_consistency() {
  const char* name = "alpha_consistency";
  Rng rng(kSeed + 3);
  DiffPoly tau = DiffPoly::derivative_var(0, Generator::Tau);
  DiffPoly big_g = DiffPoly::constant(Coefficient::g(), Generator::Tau);
  for (int i = 0; i < 20; ++i) {
    FrenetField v = random_evolution_field(rng);
    auto var = geometry::variation_coefficients(v);
    DiffPoly alt = total_derivative(var.phi) + tau * var.phi + big_g * v.g;
    if (var.alpha != alt)
      return make_fail(name, "symbolic", diffalg::format(var.alpha - alt),
                       "alpha disagrees with phi' + tau phi + G g");
  }
  return make_pass(name, "symbolic", "exact",
                   "alpha reduces to phi' + tau phi + G g on evolution fields");
}

// ---------------------------------------------------------------------
// Numeric checks

num::SampledField sample_profile(double (*f)(double), std::size_t n, double s0,
                                 double length, bool periodic) {
  num::SampledField field;
  field.s0 = s0;
  field.periodic = periodic;
  field.ds = length / static_cast<double>(periodic ? n : n - 1);
  field.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) field.samples[i] = f(field.s_at(i));
  return field;
}

CheckResult check_hopf_cole_consistency() {
  const char* name = "hopf_cole_consistency";
  const double t_end = 0.5;
  auto run_once = [&](std::size_t n, double dt) {
    auto k0 = sample_profile([](double s) { return 2.0 + std::cos(s); }, n, 0.0,
                             2.0 * M_PI, true);
    auto heat = num::solve_heat(k0, 0.0, t_end, dt);
    auto tau_from_heat = num::hopf_cole(heat.fields.back());
    auto burgers = num::solve_burgers(num::hopf_cole(k0), t_end, dt);
    const auto& tau_direct = burgers.fields.back();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst,
                       std::fabs(tau_from_heat.samples[i] - tau_direct.samples[i]));
    return worst;
  };
  double coarse = run_once(256, 1e-4);
  double fine = run_once(512, 5e-5);
  std::string residual = fmt_g17(coarse);
  std::string details = "error(256) = " + fmt_g17(coarse) +
                        ", error(512) = " + fmt_g17(fine) +
                        ", ratio = " + fmt_g17(coarse / fine);
  if (!(coarse <= 5e-4))
    return make_fail(name, "numeric", residual, details + "; exceeds 5e-4");
  if (!(coarse / fine >= 3.5))
    return make_fail(name, "numeric", residual, details + "; ratio below 3.5");
  return make_pass(name, "numeric", residual, details);
}

CheckResult check_reconstruction_convergence() {
  const char* name = "reconstruction_convergence";
  auto metric = num::AmbientMetric::for_curvature(0.0);
  auto drift_at = [&](double h) {
    std::size_t n = static_cast<std::size_t>(std::lround(10.0 / h)) + 1;
    auto tau = sample_profile([](double s) { return std::sin(s); }, n, 0.0, 10.0,
                              false);
    auto curve = num::reconstruct_curve(tau, metric, num::default_frame(metric), h);
    double worst = 0.0;
    for (const auto& fs : curve) worst = std::max(worst, num::gram_residual(fs, metric));
    return worst;
  };
  double d4 = drift_at(4e-3), d2 = drift_at(2e-3), d1 = drift_at(1e-3);
  double r42 = d4 / d2, r21 = d2 / d1;
  std::string residual = fmt_g17(d1);
  std::string details = "drift = [" + fmt_g17(d4) + ", " + fmt_g17(d2) + ", " +
                        fmt_g17(d1) + "], ratios = [" + fmt_g17(r42) + ", " +
                        fmt_g17(r21) + "]";
  if (!(d1 <= 1e-8))
    return make_fail(name, "numeric", residual, details + "; drift above 1e-8");
  if (!(r42 >= 12.0 && r42 <= 20.0 && r21 >= 12.0 && r21 <= 20.0))
    return make_fail(name, "numeric", residual,
                     details + "; ratios outside 16 +/- 25%");
  return make_pass(name, "numeric", residual, details);
}

CheckResult check_filament_consistency() {
  const char* name = "filament_consistency";
  const std::size_t n = 256;
  auto tau0 = sample_profile([](double s) { return 0.5 * std::sin(s); }, n, 0.0,
                             2.0 * M_PI, true);
  auto run = num::evolve_filament(tau0, 0.0, 1e-4, {0.0, 1e-4, 1e-3, 0.1});
  auto velocity_error = [&](const num::FilamentSnapshot& next) {
    const auto& base = run.snapshots[0];
    double dt = next.time - base.time;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int c = 0; c < run.metric.dim; ++c) {
        double v = (next.curve[i].gamma[c] - base.curve[i].gamma[c]) / dt -
                   base.curve[i].N[c];
        acc += v * v;
      }
      worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
  };
  double err_coarse = velocity_error(run.snapshots[2]);  // dt probe 1e-3
  double err_fine = velocity_error(run.snapshots[1]);    // dt probe 1e-4
  double anchor_drift = 0.0;
  for (const auto& snap : run.snapshots)
    anchor_drift = std::max(anchor_drift, num::gram_residual(snap.anchor, run.metric));
  std::string residual = fmt_g17(err_coarse);
  std::string details = "velocity error(1e-3) = " + fmt_g17(err_coarse) +
                        ", (1e-4) = " + fmt_g17(err_fine) +
                        ", ratio = " + fmt_g17(err_coarse / err_fine) +
                        ", anchor gram drift = " + fmt_g17(anchor_drift);
  if (!(err_coarse <= 1e-2))
    return make_fail(name, "numeric", residual, details + "; exceeds 1e-2");
  if (!(err_coarse / err_fine >= 8.0))
    return make_fail(name, "numeric", residual, details + "; ratio below 8");
  if (!(anchor_drift <= 1e-6))
    return make_fail(name, "numeric", residual, details + "; anchor drift above 1e-6");
  return make_pass(name, "numeric", residual, details);
}

CheckResult check_cylinder_invariants() {
  const char* name = "cylinder_invariants";
  auto metric = num::AmbientMetric::for_curvature(0.0);
  const double h = 1e-3;
  std::size_t n = static_cast<std::size_t>(std::lround(10.0 / h)) + 1;
  auto tau = sample_profile([](double s) { return std::sin(s); }, n, 0.0, 10.0,
                            false);
  auto curve = num::reconstruct_curve(tau, metric, num::default_frame(metric), h);
  auto k = num::inverse_hopf_cole(tau, 1.0);
  auto rep = num::cylinder_check(curve, k, metric);
  std::string residual = fmt_g17(std::max(rep.parallelism_residual,
                                          rep.planarity_residual));
  std::string details = "parallelism = " + fmt_g17(rep.parallelism_residual) +
                        ", planarity = " + fmt_g17(rep.planarity_residual);
  if (!(rep.parallelism_residual <= 1e-6 && rep.planarity_residual <= 1e-6))
    return make_fail(name, "numeric", residual, details + "; above 1e-6");
  return make_pass(name, "numeric", residual, details);
}

CheckResult check_gauge_residual_convergence() {
  const char* name = "gauge_residual_convergence";
  const double a = 1.0, b = 4.0, t_probe = 0.1;
  auto residual_at = [&](std::size_t n) {
    auto u0 = sample_profile([](double x) { return std::sin(x); }, n, 0.0,
                             2.0 * M_PI, true);
    double dx = u0.ds;
    double delta = 0.4 * dx * dx;  // probe spacing for the time derivative
    double dt = 0.36 * dx * dx;
    auto run = num::solve_burgers_classic(
        u0, dt, {t_probe - delta, t_probe, t_probe + delta});
    return num::burgers_gauge_residual(run, a, b);
  };
  double coarse = residual_at(128);
  double fine = residual_at(256);
  double ratio = coarse / fine;
  std::string residual = fmt_g17(fine);
  std::string details = "residual(128) = " + fmt_g17(coarse) +
                        ", residual(256) = " + fmt_g17(fine) +
                        ", ratio = " + fmt_g17(ratio);
  if (!(ratio >= 3.0 && ratio <= 6.0))
    return make_fail(name, "numeric", residual,
                     details + "; not second-order decay");
  return make_pass(name, "numeric", residual, details);
}

CheckResult check_heat_gauge_equivalence() {
  const char* name = "heat_gauge_equivalence";
  const double d = 0.7, G = 1.0, t_end = 0.25, dt = 1e-3;
  const std::size_t n = 64;
  auto k0 = sample_profile([](double s) { return 2.0 + std::cos(s); }, n, 0.0,
                           2.0 * M_PI, true);
  auto plain = num::solve_heat(k0, G, t_end, dt);
  auto gauged = num::solve_heat(k0, G, t_end, dt, 2, d);
  double scale = std::exp(-d * t_end);
  double worst = 0.0, magnitude = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ref = plain.fields.back().samples[i];
    double via = scale * gauged.fields.back().samples[i];
    worst = std::max(worst, std::fabs(via - ref));
    magnitude = std::max(magnitude, std::fabs(ref));
  }
  double rel = worst / magnitude;
  std::string residual = fmt_g17(rel);
  std::string details = "relative deviation after removing exp(d t) = " + residual;
  if (!(rel <= 1e-12))
    return make_fail(name, "numeric", residual, details + "; above 1e-12");
  return make_pass(name, "numeric", residual, details);
}

}  // namespace

const std::vector<std::string>& expression_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> c;
    // Every printed hierarchy member.
    for (const auto& lvl : hierarchy::reference_hierarchy()) {
      if (!lvl.field.g.is_zero()) c.push_back(diffalg::format(lvl.field.g));
      c.push_back(diffalg::format(lvl.tau_flow));
      c.push_back(diffalg::format(lvl.k_flow));
    }
    const char* extra[] = {
        "0",
        "1",
        "-1",
        "3/2",
        "-7/3",
        "G",
        "G^2",
        "2*G^3",
        "t",
        "t0",
        "t1",
        "t12",
        "k",
        "k3",
        "-t1",
        "t + 1",
        "t - 1",
        "1 - t",
        "t^2",
        "t1^3",
        "t*t1*t2",
        "t^2*t1^2",
        "G*t1",
        "G^2*t + G*t1",
        "1/2*t2",
        "-3/4*t*t1",
        "(t + 1)*(t - 1)",
        "(t1 + t^2)^2",
        "t2 + 2*t*t1",
        "(G + 3*t^2)*t1",
        "t3 + 3*t*t2 + 3*t1^2",
        "k2 + G*k",
        "k1 - k*k",
        "(k + 1)^3",
        "2*(t1 + t)*(t2 + 1)",
        "t5",
        "1/3 + 1/6",
        "2/4",
        "t1 + t1",
        "t*t",
        "(t)",
        "((t2))",
        " t1 + 2 * t ",
        "5 - 3*t + 2*t^2 - t^3",
        "G*G",
        "7*t4*t1",
        "1/2*G*t2^2",
    };
    for (const char* s : extra) c.emplace_back(s);
    return c;
  }();
  return corpus;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  if (opts.symbolic) {
    report.checks.push_back(check_hierarchy_reproduction());
    report.checks.push_back(check_hierarchy_commutation());
    report.checks.push_back(check_geometric_bracket());
    report.checks.push_back(check_eq37_agreement(opts.inject_eq21_sign_flip));
    report.checks.push_back(check_theorem10(opts.inject_eq21_sign_flip));
    report.checks.push_back(check_antiderivative_oracle());
    report.checks.push_back(check_rchain_g0());
    report.checks.push_back(check_flows_total_derivative());
    report.checks.push_back(check_parser_roundtrip());
    report.checks.push_back(check_alpha_consistency());
  }
  if (opts.numeric) {
    report.checks.push_back(check_hopf_cole_consistency());
    report.checks.push_back(check_reconstruction_convergence());
    report.checks.push_back(check_filament_consistency());
    report.checks.push_back(check_cylinder_invariants());
    report.checks.push_back(check_gauge_residual_convergence());
    report.checks.push_back(check_heat_gauge_equivalence());
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

std::string report_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : report.checks) {
    checks[c.name] = {{"status", c.pass ? "pass" : "fail"},
                      {"group", c.group},
                      {"residual", c.residual},
                      {"details", c.details}};
  }
  nlohmann::json out = {{"checks", checks},
                        {"overall", report.all_pass ? "pass" : "fail"}};
  return out.dump(2);
}

std::string report_table(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.group
       << "): " << c.residual << "\n";
  os << "overall: " << (report.all_pass ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace pnf::verify
