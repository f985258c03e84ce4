#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <heatline/gl_solver.hpp>
#include <heatline/jacobi.hpp>
#include <heatline/linalg.hpp>
#include <heatline/spectral_data.hpp>

namespace heatline {

/// q~(k) = (1/pi) int_0^pi Q(x) cos(kx) dx for k = 0..kmax, by the trapezoid
/// rule on the sample grid.
std::vector<double> cosine_moments(const PotentialSamples& q, std::size_t kmax);

/// Galerkin matrix in the normalized sine basis sqrt(2/pi) sin(nx):
/// P_nm = n^2 delta_nm + q~(|n-m|) - q~(n+m).
struct RitzMatrix {
  std::size_t size = 0;
  Matrix p;
};

/// `moments` must hold q~(0..2n).
RitzMatrix assemble_ritz_matrix(std::span<const double> moments, std::size_t n);
RitzMatrix assemble_ritz_matrix(const PotentialSamples& q, std::size_t n);

struct ErrorSummary {
  /// max_j |nu_j^(M) - nu_j| / nu_j over compared indices with nu_j != 0.
  double delta = 0.0;
  /// |nu_1^(M) - nu_1|, reported on its own.
  double ground_abs_error = 0.0;
  /// Relative error per index; absolute error where the target is zero.
  std::vector<double> per_eigenvalue;
};

/// Compares the first `compare_count` computed eigenvalues with the target.
/// Index 1 is left out of delta when its target is zero. Throws
/// std::invalid_argument if any target nu_j with j >= 2 is zero or if
/// compare_count exceeds the computed eigenvalues.
ErrorSummary relative_error(std::span<const double> computed, const TargetSpectrum& target,
                            std::size_t compare_count);

struct RitzOptions {
  std::size_t basis_size = 0;     // 0: number of grid intervals
  std::size_t compare_count = 0;  // 0: min(basis_size, 20)
  double jacobi_tol = 1e-10;
  int max_sweeps = 100;
};

struct RitzReport {
  std::size_t basis_size = 0;
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column j: sine coefficients of mode j+1
  TargetSpectrum target;
  double delta = 0.0;
  double ground_abs_error = 0.0;
  std::vector<double> per_eigenvalue_errors;
  int sweeps = 0;
};

std::size_t resolve_basis_size(const RitzOptions& options, const Grid& grid);
std::size_t resolve_compare_count(const RitzOptions& options, std::size_t basis_size);

/// Moments, Galerkin matrix, Jacobi diagonalization, error metrics.
RitzReport verify_potential(const PotentialSamples& q, const TargetSpectrum& target,
                            const RitzOptions& options = {});

class DegenerateShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinearizedDiagnostic {
  std::size_t argmax = 0;
  std::size_t argmin = 0;
  double x_max = 0.0;
  double x_min = 0.0;
  Matrix relative_error;  // E_nm = |P1_nm - P2_nm| / |P1_nm|, 0 where P1_nm == 0
  double min_error = 0.0;
  double max_error = 0.0;
  std::size_t skipped_entries = 0;  // entries with P1_nm == 0
};

/// Moments where Q is replaced by straight lines on [x_max, x_min] and
/// [x_min, pi] (closed form), trapezoid on [0, x_max].
std::vector<double> linearized_cosine_moments(const PotentialSamples& q, std::size_t kmax);

/// Compares the Galerkin matrix built from linearized moments against the
/// trapezoid one. Throws DegenerateShapeError unless argmax Q precedes
/// argmin Q on the grid.
LinearizedDiagnostic linearized_qtilde_diagnostic(const PotentialSamples& q, std::size_t n);

}  // namespace heatline
