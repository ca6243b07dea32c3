#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "diffalg/parse.hpp"
#include "hierarchy/hierarchy.hpp"
#include "numerics/checks.hpp"
#include "numerics/evolution.hpp"
#include "numerics/frames.hpp"
#include "numerics/grid.hpp"

using namespace pnf::numerics;
using pnf::Error;
using pnf::ErrorCode;

namespace {

SampledField sample(double (*f)(double), std::size_t n, double s0, double length,
                    bool periodic) {
  SampledField field;
  field.s0 = s0;
  field.periodic = periodic;
  field.ds = length / static_cast<double>(periodic ? n : n - 1);
  field.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) field.samples[i] = f(field.s_at(i));
  return field;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("finite difference stencils hit trig functions at 4th order") {
  auto f = sample([](double s) { return std::sin(s); }, 128, 0.0, 2.0 * M_PI, true);
  auto d1 = fd_derivative(f, 1);
  auto d2 = fd_derivative(f, 2);
  auto d3 = fd_derivative(f, 3);
  auto d4 = fd_derivative(f, 4);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double s = f.s_at(i);
    CHECK(d1[i] == doctest::Approx(std::cos(s)).epsilon(1e-6));
    CHECK(d2[i] == doctest::Approx(-std::sin(s)).epsilon(1e-6).scale(1.0));
    CHECK(d3[i] == doctest::Approx(-std::cos(s)).epsilon(1e-5).scale(1.0));
    CHECK(d4[i] == doctest::Approx(std::sin(s)).epsilon(1e-4).scale(1.0));
  }
  // Non-periodic grids fall back to shifted windows of the same order.
  auto g = sample([](double s) { return std::exp(s / 4.0); }, 101, 0.0, 2.0, false);
  auto g1 = fd_derivative(g, 1);
  CHECK(g1.front() == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(g1.back() == doctest::Approx(0.25 * std::exp(0.5)).epsilon(1e-7));
}

TEST_CASE("cubic interpolation reproduces cubics exactly and nodes identically") {
  auto f = sample([](double s) { return ((s - 2) * s + 1) * s; }, 41, 0.0, 4.0,
                  false);
  for (double s : {0.13, 1.77, 2.5, 3.9}) {
    double expect = ((s - 2) * s + 1) * s;
    CHECK(interpolate(f, s) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(interpolate(f, f.s_at(7)) == doctest::Approx(f.samples[7]).epsilon(1e-14));
}

TEST_CASE("cumulative integral is 4th order") {
  auto f = sample([](double s) { return std::cos(s); }, 201, 0.0, 2.0, false);
  auto acc = cumulative_integral(f);
  for (std::size_t i = 0; i < f.size(); i += 20)
    CHECK(acc[i] == doctest::Approx(std::sin(f.s_at(i))).epsilon(1e-9).scale(1.0));
}

TEST_CASE("default frames satisfy the gram relations") {
  for (double G : {0.0, 1.0, 2.5, -1.0, -0.3}) {
    auto metric = AmbientMetric::for_curvature(G);
    auto frame = default_frame(metric);
    CHECK(gram_residual(frame, metric) <= 1e-15);
  }
  CHECK(AmbientMetric::for_curvature(0.0).dim == 3);
  CHECK(AmbientMetric::for_curvature(1.0).dim == 4);
  CHECK(AmbientMetric::for_curvature(-1.0).dim == 4);
  // Explicit check of the flat seed.
  auto m0 = AmbientMetric::for_curvature(0.0);
  auto f0 = default_frame(m0);
  CHECK(m0.inner(f0.T, f0.T) == doctest::Approx(1.0));
  CHECK(m0.inner(f0.N, f0.B) == doctest::Approx(-1.0));
  CHECK(m0.inner(f0.N, f0.N) == doctest::Approx(0.0));
}

TEST_CASE("reconstruction: zero torsion gives the closed-form parabola") {
  auto metric = AmbientMetric::for_curvature(0.0);
  auto frame = default_frame(metric);
  auto tau = sample([](double) { return 0.0; }, 501, 0.0, 5.0, false);
  auto curve = reconstruct_curve(tau, metric, frame, tau.ds);
  for (std::size_t i = 0; i < curve.size(); i += 50) {
    double s = tau.s_at(i);
    for (int c = 0; c < 3; ++c) {
      double expect = s * frame.T[c] + 0.5 * s * s * frame.N[c];
      CHECK(curve[i].gamma[c] == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
      CHECK(curve[i].N[c] == doctest::Approx(frame.N[c]));
    }
  }
}

TEST_CASE("reconstruction: constant torsion scales N exponentially") {
  auto metric = AmbientMetric::for_curvature(0.0);
  auto frame = default_frame(metric);
  auto tau = sample([](double) { return 0.5; }, 201, 0.0, 2.0, false);
  auto curve = reconstruct_curve(tau, metric, frame, tau.ds);
  for (std::size_t i = 0; i < curve.size(); i += 25) {
    double scale = std::exp(0.5 * tau.s_at(i));
    for (int c = 0; c < 3; ++c)
      CHECK(curve[i].N[c] ==
            doctest::Approx(scale * frame.N[c]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("reconstruction guards") {
  auto metric = AmbientMetric::for_curvature(0.0);
  auto tau = sample([](double s) { return std::sin(s); }, 64, 0.0, 2.0, false);
  auto frame = default_frame(metric);
  CHECK_THROWS_AS(reconstruct_curve(tau, metric, frame, tau.ds * 0.7), Error);
  FrameState bad = frame;
  bad.T[0] += 1e-6;
  CHECK_THROWS_AS(reconstruct_curve(tau, metric, bad, tau.ds), Error);
  try {
    reconstruct_curve(tau, metric, bad, tau.ds);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInitialFrame);
  }
}

TEST_CASE("reconstruction on the curved space forms keeps the hyperquadric") {
  for (double G : {1.0, -1.0}) {
    auto metric = AmbientMetric::for_curvature(G);
    auto frame = default_frame(metric);
    auto tau = sample([](double s) { return 0.3 * std::sin(s); }, 401, 0.0, 4.0,
                      false);
    auto curve = reconstruct_curve(tau, metric, frame, tau.ds);
    double worst = 0.0;
    for (const auto& fs : curve) worst = std::max(worst, gram_residual(fs, metric));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("burgers solver keeps constants fixed") {
  auto u0 = sample([](double) { return 0.7; }, 64, 0.0, 2.0 * M_PI, true);
  auto run = solve_burgers(u0, 0.1, 1e-3);
  CHECK(max_abs_diff(run.fields.back().samples, u0.samples) <= 1e-13);
}

TEST_CASE("heat solver: eigenfunction with G balancing the decay") {
  auto k0 = sample([](double s) { return std::cos(s); }, 128, 0.0, 2.0 * M_PI,
                   true);
  auto run = solve_heat(k0, 1.0, 0.5, 1e-4);
  // Semi-discrete eigenvalue differs from -1 by O(ds^2).
  CHECK(max_abs_diff(run.fields.back().samples, k0.samples) <= 5e-4);
}

TEST_CASE("heat solver conserves the mean at G = 0") {
  auto k0 = sample([](double s) { return 2.0 + std::cos(s); }, 128, 0.0,
                   2.0 * M_PI, true);
  auto run = solve_heat(k0, 0.0, 0.3, 1e-4);
  auto mean = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
  };
  CHECK(mean(run.fields.back().samples) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("solver guards") {
  auto u0 = sample([](double s) { return std::sin(s); }, 64, 0.0, 2.0 * M_PI, true);
  double limit = 0.4 * u0.ds * u0.ds;
  CHECK_THROWS_AS(solve_burgers(u0, 0.1, 2.0 * limit), Error);
  try {
    solve_burgers(u0, 0.1, 2.0 * limit);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StabilityViolation);
  }
  auto open = sample([](double s) { return std::sin(s); }, 64, 0.0, 2.0, false);
  CHECK_THROWS_AS(solve_burgers(open, 0.1, 1e-4), Error);
}

TEST_CASE("hopf-cole forward and inverse") {
  // k = e^s gives tau = 1.
  auto k = sample([](double s) { return std::exp(s); }, 301, 0.0, 3.0, false);
  auto tau = hopf_cole(k);
  for (std::size_t i = 0; i < tau.size(); i += 30)
    CHECK(tau.samples[i] == doctest::Approx(1.0).epsilon(1e-8));

  // Closed form for k = 2 + cos s.
  auto k2 = sample([](double s) { return 2.0 + std::cos(s); }, 1024, 0.0,
                   2.0 * M_PI, true);
  auto tau2 = hopf_cole(k2);
  for (std::size_t i = 0; i < tau2.size(); i += 64) {
    double s = tau2.s_at(i);
    CHECK(tau2.samples[i] ==
          doctest::Approx(-std::sin(s) / (2.0 + std::cos(s))).epsilon(1e-8));
  }

  // Round trip.
  auto back = inverse_hopf_cole(tau2, k2.samples[0]);
  CHECK(max_abs_diff(back.samples, k2.samples) <= 1e-8);

  auto bad = sample([](double s) { return std::cos(s); }, 64, 0.0, 2.0 * M_PI, true);
  CHECK_THROWS_AS(hopf_cole(bad), Error);
  CHECK_THROWS_AS(inverse_hopf_cole(tau2, -1.0), Error);
}

TEST_CASE("filament flow with zero torsion translates along constant N") {
  auto tau0 = sample([](double) { return 0.0; }, 64, 0.0, 2.0 * M_PI, true);
  auto run = evolve_filament(tau0, 0.0, 1e-3, {0.0, 0.05});
  const auto& a = run.snapshots[0];
  const auto& b = run.snapshots[1];
  CHECK(max_abs_diff(b.tau.samples, a.tau.samples) <= 1e-14);
  for (std::size_t i = 0; i < a.curve.size(); i += 8) {
    for (int c = 0; c < 3; ++c) {
      double moved = a.curve[i].gamma[c] + 0.05 * a.curve[i].N[c];
      CHECK(b.curve[i].gamma[c] == doctest::Approx(moved).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("filament/torsion consistency at combined scheme order") {
  auto error_at = [](std::size_t n) {
    auto tau0 = sample([](double s) { return 0.5 * std::sin(s); }, n, 0.0,
                       2.0 * M_PI, true);
    auto run = evolve_filament(tau0, 0.0, 5e-5, {0.0, 0.05});
    const auto& snap = run.snapshots.back();
    auto metric = AmbientMetric::for_curvature(0.0);
    auto extracted = extract_torsion(snap.curve, tau0.ds, true, metric);
    double worst = 0.0;
    for (std::size_t i = 0; i < extracted.size(); ++i)
      worst = std::max(worst, std::fabs(extracted[i] - snap.tau.samples[i]));
    return worst;
  };
  double coarse = error_at(128);
  double fine = error_at(256);
  CHECK(coarse <= 5e-3);
  CHECK(coarse / fine >= 3.0);
}

TEST_CASE("cylinder invariants hold and flag perturbations") {
  auto metric = AmbientMetric::for_curvature(0.0);
  std::size_t n = static_cast<std::size_t>(std::lround(2.0 * M_PI / 1e-3)) + 1;
  auto tau = sample([](double s) { return std::sin(s); }, n, 0.0, 2.0 * M_PI,
                    false);
  auto curve = reconstruct_curve(tau, metric, default_frame(metric), tau.ds);
  auto k = inverse_hopf_cole(tau, 1.0);
  auto rep = cylinder_check(curve, k, metric);
  CHECK(rep.parallelism_residual <= 1e-6);
  CHECK(rep.planarity_residual <= 1e-6);

  // Constant torsion, constant k: xi is exactly N0 / c.
  auto tau_c = sample([](double) { return 0.0; }, 128, 0.0, 1.0, false);
  auto curve_c = reconstruct_curve(tau_c, metric, default_frame(metric), tau_c.ds);
  SampledField k_c = tau_c;
  for (auto& v : k_c.samples) v = 2.0;
  auto rep_c = cylinder_check(curve_c, k_c, metric);
  CHECK(rep_c.parallelism_residual <= 1e-12);

  // Negative control: a single perturbed sample trips the parallelism.
  SampledField k_bad = k;
  k_bad.samples[n / 2] *= 1.01;
  auto rep_bad = cylinder_check(curve, k_bad, metric);
  CHECK(rep_bad.parallelism_residual > 1e-4);

  SampledField short_k = k;
  short_k.samples.pop_back();
  CHECK_THROWS_AS(cylinder_check(curve, short_k, metric), Error);
}

TEST_CASE("parallel frame samples verify the frame equations") {
  auto metric = AmbientMetric::for_curvature(0.0);
  std::size_t n = 2001;
  auto tau = sample([](double s) { return std::sin(s); }, n, 0.0, 2.0 * M_PI,
                    false);
  auto curve = reconstruct_curve(tau, metric, default_frame(metric), tau.ds);
  auto k = inverse_hopf_cole(tau, 1.0);
  auto rep = parallel_frame_samples(curve, k, metric);
  CHECK(rep.xi_residual <= 1e-6);
  CHECK(rep.eta_residual <= 1e-6);
  REQUIRE(rep.xi.size() == n);

  // Hierarchy correspondence: g_n evaluated on tau jets equals
  // k^(n-1)/k pointwise.
  auto levels = pnf::hierarchy::generate_hierarchy(5);
  for (int lvl = 2; lvl <= 4; ++lvl) {
    const auto& g = levels[static_cast<std::size_t>(lvl)].field.g;
    auto knum = fd_derivative(k, static_cast<unsigned>(lvl - 1));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; i += 10) {
      auto jets = fd_jet(tau, i, 3);
      double lhs = g.eval({jets.data(), jets.size()}, 0.0);
      double rhs = knum[i] / k.samples[i];
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("burgers gauge residual") {
  // Constant data: residual is zero to round-off for any gauge.
  auto u0 = sample([](double) { return 0.8; }, 64, 0.0, 2.0 * M_PI, true);
  auto run = solve_burgers_classic(u0, 1e-3, {0.0, 0.01, 0.02});
  CHECK(burgers_gauge_residual(run, 1.0, 4.0) <= 1e-12);

  // a = 0, b = 1 is the identity scaling tau = u / 2.
  auto us = sample([](double x) { return std::sin(x); }, 128, 0.0, 2.0 * M_PI,
                   true);
  double dx = us.ds;
  double dt = 0.35 * dx * dx;
  auto run2 = solve_burgers_classic(us, dt, {0.1 - 4 * dt, 0.1, 0.1 + 4 * dt});
  double res = burgers_gauge_residual(run2, 0.0, 1.0);
  CHECK(res <= 5e-3);
}

TEST_CASE("heat gauge factor removes a constant reaction term") {
  auto k0 = sample([](double s) { return 2.0 + std::cos(s); }, 64, 0.0,
                   2.0 * M_PI, true);
  auto plain = solve_heat(k0, 1.0, 0.25, 1e-3);
  auto gauged = solve_heat(k0, 1.0, 0.25, 1e-3, 2, 0.7);
  double scale = std::exp(-0.7 * 0.25);
  double worst = 0.0;
  for (std::size_t i = 0; i < k0.size(); ++i)
    worst = std::max(worst, std::fabs(scale * gauged.fields.back().samples[i] -
                                      plain.fields.back().samples[i]));
  CHECK(worst <= 1e-12);
}
