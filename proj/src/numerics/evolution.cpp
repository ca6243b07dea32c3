#include "numerics/evolution.hpp"

#include <cmath>

namespace pnf::numerics {

namespace {

constexpr double kStabilityFactor = 0.4;

void check_snapshot_times(const std::vector<double>& times) {
  if (times.empty())
    throw Error(ErrorCode::InvalidArgument, "need at least one snapshot time");
  double prev = -1.0;
  for (double t : times) {
    if (t < 0.0 || t <= prev)
      throw Error(ErrorCode::InvalidArgument,
                  "snapshot times must be non-negative and strictly increasing");
    prev = t;
  }
}

std::vector<double> uniform_times(double t_end, std::size_t snapshots) {
  if (snapshots < 2) snapshots = 2;
  std::vector<double> times(snapshots);
  for (std::size_t i = 0; i < snapshots; ++i)
    times[i] = t_end * static_cast<double>(i) / static_cast<double>(snapshots - 1);
  return times;
}

void rhs_eval(const ParabolicRhs& rhs, const SampledField& grid,
              const std::vector<double>& u, std::vector<double>& out) {
  const std::size_t n = u.size();
  const double h = grid.ds;
  auto at = [&](std::size_t i, std::ptrdiff_t k) {
    std::ptrdiff_t j =
        (static_cast<std::ptrdiff_t>(i) + k) % static_cast<std::ptrdiff_t>(n);
    if (j < 0) j += static_cast<std::ptrdiff_t>(n);
    return u[static_cast<std::size_t>(j)];
  };
  for (std::size_t i = 0; i < n; ++i) {
    double us, uss;
    if (rhs.spatial_order >= 4) {
      us = (at(i, -2) - 8 * at(i, -1) + 8 * at(i, 1) - at(i, 2)) / (12 * h);
      uss = (-at(i, -2) + 16 * at(i, -1) - 30 * u[i] + 16 * at(i, 1) - at(i, 2)) /
            (12 * h * h);
    } else {
      us = (at(i, 1) - at(i, -1)) / (2 * h);
      uss = (at(i, 1) - 2 * u[i] + at(i, -1)) / (h * h);
    }
    out[i] = rhs.diffusion * uss + (rhs.advect_self * u[i] + rhs.advect) * us +
             rhs.reaction * u[i];
  }
}

}  // namespace

EvolutionRun solve_parabolic(const SampledField& u0, const ParabolicRhs& rhs,
                             double dt, const std::vector<double>& times) {
  u0.validate();
  if (!u0.periodic)
    throw Error(ErrorCode::InvalidArgument, "solver requires a periodic grid");
  check_snapshot_times(times);
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (rhs.diffusion != 0.0 && dt > kStabilityFactor * u0.ds * u0.ds + 1e-15)
    throw Error(ErrorCode::StabilityViolation,
                "explicit step exceeds the stability bound 0.4 ds^2");

  EvolutionRun run;
  run.dt = dt;
  const std::size_t n = u0.size();
  std::vector<double> u = u0.samples;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

  auto rk4 = [&](double h) {
    rhs_eval(rhs, u0, u, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * h * k1[i];
    rhs_eval(rhs, u0, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * h * k2[i];
    rhs_eval(rhs, u0, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + h * k3[i];
    rhs_eval(rhs, u0, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  };

  double t = 0.0;
  for (double target : times) {
    double gap = target - t;
    if (gap > 1e-14) {
      long steps = static_cast<long>(std::ceil(gap / dt - 1e-9));
      for (long s = 0; s < steps; ++s) rk4(s + 1 < steps ? dt : gap - dt * (steps - 1));
      t = target;
    }
    SampledField snap = u0;
    snap.samples = u;
    run.times.push_back(target);
    run.fields.push_back(std::move(snap));
  }
  return run;
}

EvolutionRun solve_burgers_at(const SampledField& tau0, double dt,
                              const std::vector<double>& times) {
  return solve_parabolic(tau0, ParabolicRhs{1.0, 2.0, 0.0, 0.0, 2}, dt, times);
}

EvolutionRun solve_burgers(const SampledField& tau0, double t_end, double dt,
                           std::size_t snapshots) {
  return solve_burgers_at(tau0, dt, uniform_times(t_end, snapshots));
}

EvolutionRun solve_burgers_classic(const SampledField& u0, double dt,
                                   const std::vector<double>& times) {
  return solve_parabolic(u0, ParabolicRhs{1.0, 1.0, 0.0, 0.0, 2}, dt, times);
}

EvolutionRun solve_heat_at(const SampledField& k0, double G, double dt,
                           const std::vector<double>& times, double d) {
  return solve_parabolic(k0, ParabolicRhs{1.0, 0.0, 0.0, G + d, 2}, dt, times);
}

EvolutionRun solve_heat(const SampledField& k0, double G, double t_end,
                        double dt, std::size_t snapshots, double d) {
  return solve_heat_at(k0, G, dt, uniform_times(t_end, snapshots), d);
}

FilamentRun evolve_filament(const SampledField& tau0, double G, double dt,
                            const std::vector<double>& times) {
  tau0.validate();
  if (!tau0.periodic)
    throw Error(ErrorCode::InvalidArgument, "filament flow requires a periodic grid");
  check_snapshot_times(times);
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (dt > kStabilityFactor * tau0.ds * tau0.ds + 1e-15)
    throw Error(ErrorCode::StabilityViolation,
                "explicit step exceeds the stability bound 0.4 ds^2");

  FilamentRun run;
  run.dt = dt;
  run.metric = AmbientMetric::for_curvature(G);

  const std::size_t n = tau0.size();
  const ParabolicRhs burgers{1.0, 2.0, 0.0, 0.0, 4};

  struct State {
    std::vector<double> tau;
    FrameState anchor;
  };

  auto rhs = [&](const State& y, State& out) {
    out.tau.resize(n);
    rhs_eval(burgers, tau0, y.tau, out.tau);
    // 4th-order torsion jet at the anchor sample.
    const double h = tau0.ds;
    auto at = [&](std::ptrdiff_t k) {
      std::ptrdiff_t j = k % static_cast<std::ptrdiff_t>(n);
      if (j < 0) j += static_cast<std::ptrdiff_t>(n);
      return y.tau[static_cast<std::size_t>(j)];
    };
    double t0 = y.tau[0];
    double t1 = (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h);
    double alpha = t1 + t0 * t0 + G;
    const FrameState& a = y.anchor;
    for (int i = 0; i < 4; ++i) {
      out.anchor.gamma[i] = a.N[i];
      out.anchor.T[i] = t0 * a.N[i];
      out.anchor.N[i] = alpha * a.N[i];
      out.anchor.B[i] = t0 * a.T[i] - alpha * a.B[i] + G * a.gamma[i];
    }
  };

  auto axpy_state = [&](const State& y, double s, const State& d, State& out) {
    out.tau.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.tau[i] = y.tau[i] + s * d.tau[i];
    for (int i = 0; i < 4; ++i) {
      out.anchor.gamma[i] = y.anchor.gamma[i] + s * d.anchor.gamma[i];
      out.anchor.T[i] = y.anchor.T[i] + s * d.anchor.T[i];
      out.anchor.N[i] = y.anchor.N[i] + s * d.anchor.N[i];
      out.anchor.B[i] = y.anchor.B[i] + s * d.anchor.B[i];
    }
  };

  State y{tau0.samples, default_frame(run.metric)};
  State k1, k2, k3, k4, tmp;

  auto rk4 = [&](double h) {
    rhs(y, k1);
    axpy_state(y, 0.5 * h, k1, tmp);
    rhs(tmp, k2);
    axpy_state(y, 0.5 * h, k2, tmp);
    rhs(tmp, k3);
    axpy_state(y, h, k3, tmp);
    rhs(tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      y.tau[i] += h / 6.0 * (k1.tau[i] + 2 * k2.tau[i] + 2 * k3.tau[i] + k4.tau[i]);
    auto mix = [&](Vec FrameState::* f) {
      for (int i = 0; i < 4; ++i)
        (y.anchor.*f)[i] += h / 6.0 *
                            ((k1.anchor.*f)[i] + 2 * (k2.anchor.*f)[i] +
                             2 * (k3.anchor.*f)[i] + (k4.anchor.*f)[i]);
    };
    mix(&FrameState::gamma);
    mix(&FrameState::T);
    mix(&FrameState::N);
    mix(&FrameState::B);
  };

  double t = 0.0;
  for (double target : times) {
    double gap = target - t;
    if (gap > 1e-14) {
      long steps = static_cast<long>(std::ceil(gap / dt - 1e-9));
      for (long s = 0; s < steps; ++s) rk4(s + 1 < steps ? dt : gap - dt * (steps - 1));
      t = target;
    }
    FilamentSnapshot snap;
    snap.time = target;
    snap.tau = tau0;
    snap.tau.samples = y.tau;
    snap.anchor = y.anchor;
    snap.curve = integrate_frenet(snap.tau, run.metric, y.anchor, tau0.ds);
    run.snapshots.push_back(std::move(snap));
  }
  return run;
}

}  // namespace pnf::numerics
