#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <heatline/linalg.hpp>

namespace heatline {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k belongs to values[k]
  int sweeps = 0;
};

class JacobiConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic-by-rows Jacobi rotations on a symmetric matrix until the
/// off-diagonal Frobenius norm drops below `tol`. Rotations on entries with
/// |a_pq| < tol / n^2 are skipped. Eigenpairs are returned in ascending order,
/// ties kept in original diagonal order.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tol = 1e-10, int max_sweeps = 100);

/// sqrt(sum_{p != q} a_pq^2).
double off_diagonal_norm(const Matrix& a);

}  // namespace heatline
