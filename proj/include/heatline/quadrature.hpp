#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace heatline {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre nodes and weights (Newton iteration on P_n).
GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite trapezoid rule over samples f(x_i) on an arbitrary increasing
/// grid.
double trapezoid(std::span<const double> x, std::span<const double> f);

}  // namespace heatline
