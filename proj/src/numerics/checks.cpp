#include "numerics/checks.hpp"

#include <cmath>

namespace pnf::numerics {

namespace {

void require_positive(const SampledField& k, const char* what) {
  for (double v : k.samples)
    if (!(v > 0.0))
      throw Error(ErrorCode::NonPositiveSample,
                  std::string(what) + " must be strictly positive");
}

double norm(const Vec& v, int dim) {
  double acc = 0.0;
  for (int i = 0; i < dim; ++i) acc += v[i] * v[i];
  return std::sqrt(acc);
}

// Per-component grids for frame-valued samples; treated as non-periodic
// since reconstructed curves are generally not closed.
std::array<SampledField, 4> component_fields(const std::vector<FrameState>& curve,
                                             Vec FrameState::* member, double ds) {
  std::array<SampledField, 4> out;
  for (int c = 0; c < 4; ++c) {
    out[c].s0 = 0.0;
    out[c].ds = ds;
    out[c].periodic = false;
    out[c].samples.resize(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i)
      out[c].samples[i] = (curve[i].*member)[c];
  }
  return out;
}

}  // namespace

SampledField hopf_cole(const SampledField& k) {
  k.validate();
  require_positive(k, "pseudo-curvature");
  SampledField tau = k;
  std::vector<double> dk = fd_derivative(k, 1);
  for (std::size_t i = 0; i < k.size(); ++i) tau.samples[i] = dk[i] / k.samples[i];
  return tau;
}

SampledField inverse_hopf_cole(const SampledField& tau, double c) {
  tau.validate();
  if (!(c > 0.0))
    throw Error(ErrorCode::NonPositiveSample, "scaling constant c must be positive");
  SampledField k = tau;
  std::vector<double> acc = cumulative_integral(tau);
  for (std::size_t i = 0; i < tau.size(); ++i) k.samples[i] = c * std::exp(acc[i]);
  return k;
}

CylinderReport cylinder_check(const std::vector<FrameState>& curve,
                              const SampledField& k, const AmbientMetric& metric) {
  if (curve.size() != k.size())
    throw Error(ErrorCode::GridMismatch, "curve and k live on different grids");
  require_positive(k, "pseudo-curvature");

  Vec xi0;
  for (int c = 0; c < 4; ++c) xi0[c] = curve[0].N[c] / k.samples[0];
  double r0 = metric.inner(curve[0].gamma, xi0);

  CylinderReport rep;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    Vec diff;
    for (int c = 0; c < 4; ++c)
      diff[c] = curve[i].N[c] / k.samples[i] - xi0[c];
    rep.parallelism_residual =
        std::max(rep.parallelism_residual, norm(diff, metric.dim));
    double plane;
    if (metric.G == 0.0) {
      Vec rel;
      for (int c = 0; c < 4; ++c) rel[c] = curve[i].gamma[c] - curve[0].gamma[c];
      plane = metric.inner(rel, xi0);
    } else {
      plane = metric.inner(curve[i].gamma, xi0) - r0;
    }
    rep.planarity_residual = std::max(rep.planarity_residual, std::fabs(plane));
  }
  return rep;
}

ParallelFrameSamples parallel_frame_samples(const std::vector<FrameState>& curve,
                                            const SampledField& k,
                                            const AmbientMetric& metric) {
  if (curve.size() != k.size())
    throw Error(ErrorCode::GridMismatch, "curve and k live on different grids");
  require_positive(k, "pseudo-curvature");

  ParallelFrameSamples out;
  out.xi.resize(curve.size());
  out.eta.resize(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      out.xi[i][c] = curve[i].N[c] / k.samples[i];
      out.eta[i][c] = k.samples[i] * curve[i].B[c];
    }
  }

  std::array<SampledField, 4> xi_f{}, eta_f{};
  for (int c = 0; c < 4; ++c) {
    xi_f[c].ds = eta_f[c].ds = k.ds;
    xi_f[c].samples.resize(curve.size());
    eta_f[c].samples.resize(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
      xi_f[c].samples[i] = out.xi[i][c];
      eta_f[c].samples[i] = out.eta[i][c];
    }
  }
  for (std::size_t i = 0; i < curve.size(); ++i) {
    Vec dxi, deta;
    for (int c = 0; c < 4; ++c) {
      dxi[c] = fd_derivative_at(xi_f[c], 1, i);
      deta[c] = fd_derivative_at(eta_f[c], 1, i) - k.samples[i] * curve[i].T[c];
    }
    out.xi_residual = std::max(out.xi_residual, norm(dxi, metric.dim));
    out.eta_residual = std::max(out.eta_residual, norm(deta, metric.dim));
  }
  return out;
}

double burgers_gauge_residual(const EvolutionRun& u, double a, double b) {
  if (u.fields.size() != 3)
    throw Error(ErrorCode::InvalidArgument,
                "gauge residual needs snapshots at t - dt, t, t + dt");
  if (!(b > 0.0)) throw Error(ErrorCode::InvalidArgument, "b must be positive");
  const SampledField& mid = u.fields[1];
  const std::size_t n = mid.size();
  const double rb = std::sqrt(b);
  const double dt2 = u.times[2] - u.times[0];

  // Resample each snapshot onto the s-grid, s = sqrt(b) x.
  auto transform = [&](const SampledField& ux) {
    SampledField tau;
    tau.s0 = rb * ux.s0;
    tau.ds = rb * ux.ds;
    tau.periodic = ux.periodic;
    tau.samples.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      double s = tau.s_at(j);
      tau.samples[j] = interpolate(ux, s / rb) / (2.0 * rb) - a / (2.0 * b);
    }
    return tau;
  };
  SampledField before = transform(u.fields[0]);
  SampledField now = transform(u.fields[1]);
  SampledField after = transform(u.fields[2]);

  double worst = 0.0;
  const double h = now.ds;
  auto at = [&](const SampledField& f, std::ptrdiff_t i) {
    std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
    i %= m;
    if (i < 0) i += m;
    return f.samples[static_cast<std::size_t>(i)];
  };
  for (std::size_t j = 0; j < n; ++j) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(j);
    double tau_t = (after.samples[j] - before.samples[j]) / dt2;
    double tau_s = (at(now, i + 1) - at(now, i - 1)) / (2.0 * h);
    double tau_ss = (at(now, i + 1) - 2.0 * now.samples[j] + at(now, i - 1)) / (h * h);
    double res = tau_t - (b * tau_ss + 2.0 * b * now.samples[j] * tau_s + a * tau_s);
    worst = std::max(worst, std::fabs(res));
  }
  return worst;
}

std::vector<double> extract_torsion(const std::vector<FrameState>& curve,
                                    double ds, bool periodic,
                                    const AmbientMetric& metric) {
  std::array<SampledField, 4> nf = component_fields(curve, &FrameState::N, ds);
  for (auto& f : nf) f.periodic = periodic;
  std::vector<double> tau(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    Vec dn;
    for (int c = 0; c < 4; ++c) dn[c] = fd_derivative_at(nf[c], 1, i);
    tau[i] = -metric.inner(dn, curve[i].B);
  }
  return tau;
}

}  // namespace pnf::numerics
