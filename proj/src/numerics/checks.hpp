#ifndef PNF_NUMERICS_CHECKS_HPP
#define PNF_NUMERICS_CHECKS_HPP

#include <vector>

#include "numerics/evolution.hpp"
#include "numerics/frames.hpp"
#include "numerics/grid.hpp"

namespace pnf::numerics {

/// tau = k_s / k with fourth-order derivative stencils. The samples
/// must be strictly positive.
SampledField hopf_cole(const SampledField& k);

/// k = c exp(int tau) with k(s0) = c > 0, quadrature by the cumulative
/// Simpson rule.
SampledField inverse_hopf_cole(const SampledField& tau, double c);

/// Deviation of a reconstructed curve from its lightlike cylinder:
/// parallelism of xi = N/k and confinement of gamma to the null
/// hyperplane (or sphere-sectioned analogue for G != 0).
struct CylinderReport {
  double parallelism_residual = 0.0;
  double planarity_residual = 0.0;
};

CylinderReport cylinder_check(const std::vector<FrameState>& curve,
                              const SampledField& k, const AmbientMetric& metric);

/// Samples of the parallel frame xi = N/k, eta = k B, with residuals of
/// the parallel-frame equations xi' = 0 and eta' = k T measured by
/// finite differences.
struct ParallelFrameSamples {
  std::vector<Vec> xi, eta;
  double xi_residual = 0.0;
  double eta_residual = 0.0;
};

ParallelFrameSamples parallel_frame_samples(const std::vector<FrameState>& curve,
                                            const SampledField& k,
                                            const AmbientMetric& metric);

/// Map a Burgers solution u(x, t) of u_t = u_xx + u u_x to
/// tau(s, t) = u(s / sqrt(b), t) / (2 sqrt(b)) - a / (2 b) and measure
/// the residual of tau_t = b tau_ss + 2 b tau tau_s + a tau_s by finite
/// differences. `u` must hold three snapshots at t - dt, t, t + dt.
double burgers_gauge_residual(const EvolutionRun& u, double a, double b);

/// Torsion recovered from a reconstructed curve: tau = -<N', B>.
std::vector<double> extract_torsion(const std::vector<FrameState>& curve,
                                    double ds, bool periodic,
                                    const AmbientMetric& metric);

}  // namespace pnf::numerics

#endif
