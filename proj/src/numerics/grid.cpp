#include "numerics/grid.hpp"

#include <algorithm>
#include <cmath>
#include <span>

namespace pnf::numerics {

namespace {

double wrap_sample(const SampledField& f, std::ptrdiff_t i) {
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  i %= n;
  if (i < 0) i += n;
  return f.samples[static_cast<std::size_t>(i)];
}

// Fornberg weights for the m-th derivative at z over nodes x.
std::vector<double> fornberg_weights(double z, std::span<const double> x, int m) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0;
    double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

// Centered classical 4th-order stencils on periodic grids.
double centered_derivative(const SampledField& f, unsigned order, std::ptrdiff_t i) {
  const double h = f.ds;
  auto v = [&](std::ptrdiff_t k) { return wrap_sample(f, i + k); };
  switch (order) {
    case 1:
      return (v(-2) - 8 * v(-1) + 8 * v(1) - v(2)) / (12 * h);
    case 2:
      return (-v(-2) + 16 * v(-1) - 30 * v(0) + 16 * v(1) - v(2)) / (12 * h * h);
    case 3:
      return (v(-3) - 8 * v(-2) + 13 * v(-1) - 13 * v(1) + 8 * v(2) - v(3)) /
             (8 * h * h * h);
    case 4:
      return (-v(-3) + 12 * v(-2) - 39 * v(-1) + 56 * v(0) - 39 * v(1) +
              12 * v(2) - v(3)) /
             (6 * h * h * h * h);
    default:
      throw Error(ErrorCode::InvalidArgument, "derivative order must be 1..4");
  }
}

double bounded_derivative(const SampledField& f, unsigned order, std::size_t i) {
  const std::size_t n = f.size();
  const std::size_t width = order + 4;  // >= 4th order at any window position
  if (n < width)
    throw Error(ErrorCode::InvalidArgument, "grid too short for the stencil");
  std::size_t base = i >= width / 2 ? i - width / 2 : 0;
  base = std::min(base, n - width);
  std::vector<double> xs(width);
  for (std::size_t k = 0; k < width; ++k)
    xs[k] = static_cast<double>(base + k) * f.ds;
  std::vector<double> w =
      fornberg_weights(static_cast<double>(i) * f.ds, xs, static_cast<int>(order));
  double acc = 0.0;
  for (std::size_t k = 0; k < width; ++k) acc += w[k] * f.samples[base + k];
  return acc;
}

}  // namespace

double fd_derivative_at(const SampledField& f, unsigned order, std::size_t i) {
  f.validate();
  if (order == 0) return f.samples[i];
  if (f.periodic) return centered_derivative(f, order, static_cast<std::ptrdiff_t>(i));
  return bounded_derivative(f, order, i);
}

std::vector<double> fd_derivative(const SampledField& f, unsigned order) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = fd_derivative_at(f, order, i);
  return out;
}

std::vector<double> fd_jet(const SampledField& f, std::size_t i, unsigned max_order) {
  std::vector<double> jet(max_order + 1);
  jet[0] = f.samples[i];
  for (unsigned m = 1; m <= max_order; ++m) jet[m] = fd_derivative_at(f, m, i);
  return jet;
}

double interpolate(const SampledField& f, double s) {
  f.validate();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  double u = (s - f.s0) / f.ds;
  std::ptrdiff_t cell = static_cast<std::ptrdiff_t>(std::floor(u));
  if (f.periodic) {
    double x = u - static_cast<double>(cell);
    // Catmull-Rom style 4-point window around the cell.
    double p0 = wrap_sample(f, cell - 1), p1 = wrap_sample(f, cell),
           p2 = wrap_sample(f, cell + 1), p3 = wrap_sample(f, cell + 2);
    double a = x + 1.0, b = x, c = x - 1.0, d = x - 2.0;
    return -p0 * b * c * d / 6.0 + p1 * a * c * d / 2.0 - p2 * a * b * d / 2.0 +
           p3 * a * b * c / 6.0;
  }
  cell = std::clamp<std::ptrdiff_t>(cell, 0, n - 2);
  std::ptrdiff_t base = std::clamp<std::ptrdiff_t>(cell - 1, 0, n - 4);
  double x = u - static_cast<double>(base);
  const double* p = f.samples.data() + base;
  double a = x, b = x - 1.0, c = x - 2.0, d = x - 3.0;
  return -p[0] * b * c * d / 6.0 + p[1] * a * c * d / 2.0 - p[2] * a * b * d / 2.0 +
         p[3] * a * b * c / 6.0;
}

std::vector<double> cumulative_integral(const SampledField& f) {
  f.validate();
  const std::size_t n = f.size();
  const double h = f.ds;
  const auto& v = f.samples;
  std::vector<double> acc(n, 0.0);
  if (n >= 3) acc[1] = h * (5.0 * v[0] + 8.0 * v[1] - v[2]) / 12.0;
  for (std::size_t i = 2; i < n; ++i)
    acc[i] = acc[i - 2] + h * (v[i - 2] + 4.0 * v[i - 1] + v[i]) / 3.0;
  return acc;
}

}  // namespace pnf::numerics
