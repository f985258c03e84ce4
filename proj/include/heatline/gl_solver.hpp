#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <heatline/grid.hpp>
#include <heatline/linalg.hpp>
#include <heatline/spectral_data.hpp>

namespace heatline {

/// How the cumulative integrals A_{mj}(s) = int_0^s b_j(t) a_m(t) dt are
/// evaluated panel by panel.
enum class GramRule {
  gauss_legendre,  // 8-node Gauss-Legendre on sub-panels of width <= 0.05
  trapezoid,       // one trapezoid per grid panel
};

GramRule parse_gram_rule(const std::string& name);
std::string to_string(GramRule rule);

/// Running value of A(s) along the grid. Each advance() adds one grid panel.
class GramAccumulator {
 public:
  GramAccumulator(const KernelTermList& terms, const Grid& grid,
                  GramRule rule = GramRule::gauss_legendre);

  /// Grid index of the current upper limit s = x_index.
  std::size_t index() const { return index_; }
  const Matrix& value() const { return value_; }

  /// Extends the upper limit to the next grid point.
  void advance();

 private:
  const KernelTermList* terms_;
  const Grid* grid_;
  GramRule rule_;
  std::size_t index_ = 0;
  Matrix value_;
};

/// A(s) at grid point `index`, with A_{mj} = int_0^{x_index} b_j a_m.
Matrix gram_integrals(const KernelTermList& terms, const Grid& grid, std::size_t index,
                      GramRule rule = GramRule::gauss_legendre);

/// psi_j(x_i) = int_0^{x_i} K(x_i, t) a_j(t) dt and its s-derivative, stored
/// row-major by grid point.
struct PsiSolution {
  std::size_t rank = 0;
  std::vector<double> psi;
  std::vector<double> dpsi;

  std::size_t points() const { return rank == 0 ? 0 : psi.size() / rank; }
  std::span<const double> psi_at(std::size_t i) const { return {psi.data() + i * rank, rank}; }
  std::span<const double> dpsi_at(std::size_t i) const { return {dpsi.data() + i * rank, rank}; }
};

/// Raised when I + A(s) is numerically singular at some grid point.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(std::size_t grid_index, double s, const std::string& detail);

  std::size_t grid_index() const { return grid_index_; }
  double coordinate() const { return s_; }

 private:
  std::size_t grid_index_;
  double s_;
};

/// Solves (I + A) psi = -A a and (I + A) psi' = r at every grid point, where
/// r_m = -sum_j [a'_j A_{mj} + (a_j + psi_j) b_j a_m].
PsiSolution solve_psi_systems(const KernelTermList& terms, const Grid& grid,
                              GramRule rule = GramRule::gauss_legendre);

/// Potential sampled on a grid.
struct PotentialSamples {
  Grid grid;
  std::vector<double> values;

  /// Linear interpolation between samples; x is clamped to [0, pi].
  double interpolate(double x) const;
};

/// Q(x_i) = 2 [K_s(x_i, x_i) + K_t(x_i, x_i)] from the analytic kernel
/// derivatives and the psi solution.
PotentialSamples recover_potential(const KernelTermList& terms, const PsiSolution& psi,
                                   const Grid& grid);

/// Full construction: kernel, psi systems, potential.
PotentialSamples construct_potential(const TargetSpectrum& spec, const Grid& grid,
                                     GramRule rule = GramRule::gauss_legendre);

}  // namespace heatline
