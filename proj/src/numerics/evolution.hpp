#ifndef PNF_NUMERICS_EVOLUTION_HPP
#define PNF_NUMERICS_EVOLUTION_HPP

#include <vector>

#include "numerics/frames.hpp"
#include "numerics/grid.hpp"

namespace pnf::numerics {

/// Time-stepped snapshots of a scalar field on a fixed grid.
struct EvolutionRun {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<SampledField> fields;
};

/// Semi-discrete right-hand side
///   u_t = diffusion u_ss + advect_self u u_s + advect u_s + reaction u
/// with central differences of the given order (2 or 4) on a periodic
/// grid.
struct ParabolicRhs {
  double diffusion = 1.0;
  double advect_self = 0.0;
  double advect = 0.0;
  double reaction = 0.0;
  int spatial_order = 2;
};

/// Method-of-lines integration with classical RK4 time stepping; the
/// explicit scheme is guarded by dt <= 0.4 ds^2. Snapshot times must be
/// non-negative and strictly increasing.
EvolutionRun solve_parabolic(const SampledField& u0, const ParabolicRhs& rhs,
                             double dt, const std::vector<double>& times);

/// tau_t = tau_ss + 2 tau tau_s (second-order stencils).
EvolutionRun solve_burgers(const SampledField& tau0, double t_end, double dt,
                           std::size_t snapshots = 2);
EvolutionRun solve_burgers_at(const SampledField& tau0, double dt,
                              const std::vector<double>& times);

/// u_t = u_xx + u u_x, the classical normalization.
EvolutionRun solve_burgers_classic(const SampledField& u0, double dt,
                                   const std::vector<double>& times);

/// k_t = k_ss + G k + d k.
EvolutionRun solve_heat(const SampledField& k0, double G, double t_end,
                        double dt, std::size_t snapshots = 2, double d = 0.0);
EvolutionRun solve_heat_at(const SampledField& k0, double G, double dt,
                           const std::vector<double>& times, double d = 0.0);

/// One snapshot of the filament flow gamma_t = N: the evolved torsion,
/// the co-evolved anchor frame at s0, and the curve reconstructed from
/// them.
struct FilamentSnapshot {
  double time = 0.0;
  SampledField tau;
  FrameState anchor;
  std::vector<FrameState> curve;
};

struct FilamentRun {
  double dt = 0.0;
  AmbientMetric metric;
  std::vector<FilamentSnapshot> snapshots;
};

/// Evolve tau by the Burgers flow and the anchor frame by the frame
/// variation equations of the normal flow
///   gamma_t = N, T_t = tau N, N_t = (tau' + tau^2 + G) N,
///   B_t = tau T - (tau' + tau^2 + G) B + G gamma,
/// then reconstruct each requested snapshot curve. Spatial derivatives
/// use fourth-order centered stencils so that the time-discretization
/// error dominates consistency probes.
FilamentRun evolve_filament(const SampledField& tau0, double G, double dt,
                            const std::vector<double>& times);

}  // namespace pnf::numerics

#endif
