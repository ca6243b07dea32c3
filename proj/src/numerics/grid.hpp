#ifndef PNF_NUMERICS_GRID_HPP
#define PNF_NUMERICS_GRID_HPP

#include <cstddef>
#include <vector>

#include "support/error.hpp"

namespace pnf::numerics {

/// Uniform grid samples of a scalar function of arc length. Periodic
/// fields treat the domain as [s0, s0 + n*ds) and wrap indices.
struct SampledField {
  double s0 = 0.0;
  double ds = 1.0;
  bool periodic = false;
  std::vector<double> samples;

  std::size_t size() const { return samples.size(); }
  double s_at(std::size_t i) const { return s0 + ds * static_cast<double>(i); }
  double length() const {
    return ds * static_cast<double>(periodic ? size() : size() - 1);
  }

  void validate() const {
    if (!(ds > 0.0)) throw Error(ErrorCode::InvalidArgument, "grid step must be positive");
    if (samples.size() < 4)
      throw Error(ErrorCode::InvalidArgument, "grid needs at least 4 samples");
  }
};

/// Centered finite-difference derivative of the given order (1..4),
/// accurate to fourth order; shifted stencils of the same accuracy are
/// used near the ends of non-periodic grids.
std::vector<double> fd_derivative(const SampledField& f, unsigned order);

/// Value at one point of the derivative stencil (periodic index access).
double fd_derivative_at(const SampledField& f, unsigned order, std::size_t i);

/// Jet of the field at sample i: [f, f', ..., f^(max_order)].
std::vector<double> fd_jet(const SampledField& f, std::size_t i, unsigned max_order);

/// Cubic Lagrange interpolation on the 4-point stencil around s.
double interpolate(const SampledField& f, double s);

/// Cumulative integral from s0 with I[0] = 0, fourth-order accurate
/// (composite Simpson with a parabolic starter panel).
std::vector<double> cumulative_integral(const SampledField& f);

}  // namespace pnf::numerics

#endif
