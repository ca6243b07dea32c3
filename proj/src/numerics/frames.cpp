#include "numerics/frames.hpp"

#include <cmath>

namespace pnf::numerics {

namespace {

Vec axpy(const Vec& a, double s, const Vec& b) {
  Vec r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] + s * b[i];
  return r;
}

struct FrameDeriv {
  Vec gamma, T, N, B;
};

FrameDeriv frenet_rhs(const FrameState& y, double tau, double G) {
  FrameDeriv d;
  for (int i = 0; i < 4; ++i) {
    d.gamma[i] = y.T[i];
    d.T[i] = y.N[i] - G * y.gamma[i];
    d.N[i] = tau * y.N[i];
    d.B[i] = y.T[i] - tau * y.B[i];
  }
  return d;
}

FrameState advance(const FrameState& y, const FrameDeriv& d, double s) {
  FrameState r;
  r.gamma = axpy(y.gamma, s, d.gamma);
  r.T = axpy(y.T, s, d.T);
  r.N = axpy(y.N, s, d.N);
  r.B = axpy(y.B, s, d.B);
  return r;
}

FrameState rk4_step(const FrameState& y, double s, double h,
                    const SampledField& tau, double G) {
  double t0 = interpolate(tau, s);
  double tm = interpolate(tau, s + 0.5 * h);
  double t1 = interpolate(tau, s + h);
  FrameDeriv k1 = frenet_rhs(y, t0, G);
  FrameDeriv k2 = frenet_rhs(advance(y, k1, 0.5 * h), tm, G);
  FrameDeriv k3 = frenet_rhs(advance(y, k2, 0.5 * h), tm, G);
  FrameDeriv k4 = frenet_rhs(advance(y, k3, h), t1, G);
  FrameState r = y;
  auto blend = [&](Vec FrameState::* field, Vec FrameDeriv::* slope) {
    for (int i = 0; i < 4; ++i)
      (r.*field)[i] = (y.*field)[i] + h / 6.0 *
                          ((k1.*slope)[i] + 2.0 * (k2.*slope)[i] +
                           2.0 * (k3.*slope)[i] + (k4.*slope)[i]);
  };
  blend(&FrameState::gamma, &FrameDeriv::gamma);
  blend(&FrameState::T, &FrameDeriv::T);
  blend(&FrameState::N, &FrameDeriv::N);
  blend(&FrameState::B, &FrameDeriv::B);
  return r;
}

}  // namespace

AmbientMetric AmbientMetric::for_curvature(double G) {
  AmbientMetric m;
  m.G = G;
  if (G == 0.0) {
    m.dim = 3;
    m.signs = {1.0, 1.0, -1.0, 0.0};
  } else if (G > 0.0) {
    m.dim = 4;
    m.signs = {1.0, 1.0, 1.0, -1.0};
  } else {
    m.dim = 4;
    m.signs = {1.0, 1.0, -1.0, -1.0};
  }
  return m;
}

double gram_residual(const FrameState& fs, const AmbientMetric& metric) {
  double r = 0.0;
  auto track = [&](double v) { r = std::max(r, std::fabs(v)); };
  track(metric.inner(fs.T, fs.T) - 1.0);
  track(metric.inner(fs.N, fs.B) + 1.0);
  track(metric.inner(fs.T, fs.N));
  track(metric.inner(fs.T, fs.B));
  track(metric.inner(fs.N, fs.N));
  track(metric.inner(fs.B, fs.B));
  if (metric.G != 0.0)
    track(metric.inner(fs.gamma, fs.gamma) - 1.0 / metric.G);
  return r;
}

FrameState default_frame(const AmbientMetric& metric) {
  const double r = 1.0 / std::sqrt(2.0);
  FrameState fs;
  if (metric.G == 0.0) {
    fs.T = {1.0, 0.0, 0.0, 0.0};
    fs.N = {0.0, r, r, 0.0};
    fs.B = {0.0, -r, r, 0.0};
  } else if (metric.G > 0.0) {
    // Base point on the hyperquadric <x,x> = 1/G; the frame spans the
    // orthogonal (+,+,-) subspace.
    fs.gamma = {1.0 / std::sqrt(metric.G), 0.0, 0.0, 0.0};
    fs.T = {0.0, 1.0, 0.0, 0.0};
    fs.N = {0.0, 0.0, r, r};
    fs.B = {0.0, 0.0, -r, r};
  } else {
    fs.gamma = {0.0, 0.0, 0.0, 1.0 / std::sqrt(-metric.G)};
    fs.T = {1.0, 0.0, 0.0, 0.0};
    fs.N = {0.0, r, r, 0.0};
    fs.B = {0.0, -r, r, 0.0};
  }
  return fs;
}

std::vector<FrameState> reconstruct_curve(const SampledField& tau,
                                          const AmbientMetric& metric,
                                          const FrameState& init, double h) {
  if (gram_residual(init, metric) > 1e-12)
    throw Error(ErrorCode::InvalidInitialFrame,
                "initial frame violates the Gram relations");
  return integrate_frenet(tau, metric, init, h);
}

std::vector<FrameState> integrate_frenet(const SampledField& tau,
                                         const AmbientMetric& metric,
                                         const FrameState& init, double h) {
  tau.validate();
  if (!(h > 0.0)) throw Error(ErrorCode::StepMismatch, "step must be positive");
  double ratio = tau.ds / h;
  long per_cell = std::lround(ratio);
  if (per_cell < 1 || std::fabs(ratio - static_cast<double>(per_cell)) > 1e-9)
    throw Error(ErrorCode::StepMismatch,
                "integrator step must divide the grid step");

  std::vector<FrameState> out;
  out.reserve(tau.size());
  FrameState y = init;
  out.push_back(y);
  const double step = tau.ds / static_cast<double>(per_cell);
  for (std::size_t cell = 0; cell + 1 < tau.size(); ++cell) {
    double s_base = tau.s_at(cell);
    for (long k = 0; k < per_cell; ++k)
      y = rk4_step(y, s_base + step * static_cast<double>(k), step, tau, metric.G);
    out.push_back(y);
  }
  return out;
}

}  // namespace pnf::numerics
