#ifndef PNF_NUMERICS_FRAMES_HPP
#define PNF_NUMERICS_FRAMES_HPP

#include <array>
#include <vector>

#include "numerics/grid.hpp"

namespace pnf::numerics {

/// Ambient vector, padded to four components; only the first `dim` of
/// the metric are meaningful.
using Vec = std::array<double, 4>;

/// Diagonal Lorentzian ambient metric. The flat case G = 0 lives in
/// R^3_1; curved space forms are realized as hyperquadrics <x,x> = 1/G
/// in R^4_1 (G > 0) or R^4_2 (G < 0).
struct AmbientMetric {
  int dim = 3;
  std::array<double, 4> signs{1.0, 1.0, -1.0, 0.0};
  double G = 0.0;

  static AmbientMetric for_curvature(double G);

  double inner(const Vec& a, const Vec& b) const {
    double acc = 0.0;
    for (int i = 0; i < dim; ++i) acc += signs[i] * a[i] * b[i];
    return acc;
  }
};

/// Samples of the curve and its Frenet frame at one parameter value.
struct FrameState {
  Vec gamma{}, T{}, N{}, B{};
};

/// Largest deviation from the pseudo-orthonormal Gram relations
/// <T,T> = 1, <N,B> = -1, <T,N> = <T,B> = <N,N> = <B,B> = 0, plus the
/// hyperquadric constraint when G != 0.
double gram_residual(const FrameState& fs, const AmbientMetric& metric);

/// Explicit pseudo-orthonormal seed frame; exact in real arithmetic up
/// to the square roots involved.
FrameState default_frame(const AmbientMetric& metric);

/// Integrate the Frenet/Gauss system
///   gamma' = T,  T' = N - G gamma,  N' = tau N,  B' = T - tau B
/// with classical RK4 at internal step h (h must divide the grid step);
/// tau between samples is interpolated cubically. Returns one state per
/// grid sample. The initial frame must satisfy the Gram relations to
/// 1e-12.
std::vector<FrameState> reconstruct_curve(const SampledField& tau,
                                          const AmbientMetric& metric,
                                          const FrameState& init, double h);

/// Same integration without the initial-frame gate; used where the seed
/// frame carries legitimate drift (e.g. a time-evolved anchor).
std::vector<FrameState> integrate_frenet(const SampledField& tau,
                                         const AmbientMetric& metric,
                                         const FrameState& init, double h);

}  // namespace pnf::numerics

#endif
