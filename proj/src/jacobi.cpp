#include <heatline/jacobi.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace heatline {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = 0; q < a.cols(); ++q) {
      if (q != p) sum += a(p, q) * a(p, q);
    }
  }
  return std::sqrt(sum);
}

EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tol, int max_sweeps) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix is not square");
  if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigen: tolerance must be positive");
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (symmetric(p, q) != symmetric(q, p)) {
        throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
      }
    }
  }

  Matrix a = symmetric;
  // Rows of vt are the accumulated rotation columns, so updates stay contiguous.
  Matrix vt = Matrix::identity(n);
  const double skip = tol / static_cast<double>(std::max<std::size_t>(1, n * n));

  int sweep = 0;
  while (off_diagonal_norm(a) >= tol) {
    if (sweep == max_sweeps) {
      throw JacobiConvergenceError("Jacobi eigensolver did not converge in " +
                                   std::to_string(max_sweeps) + " sweeps (off-diagonal norm " +
                                   std::to_string(off_diagonal_norm(a)) + ")");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) < skip) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        auto row_p = a.row(p);
        auto row_q = a.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double g = row_p[k];
          const double h = row_q[k];
          const double gp = g - s * (h + g * tau);
          const double hq = h + s * (g - h * tau);
          row_p[k] = gp;
          row_q[k] = hq;
          a(k, p) = gp;
          a(k, q) = hq;
        }

        auto vp = vt.row(p);
        auto vq = vt.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double g = vp[k];
          const double h = vq[k];
          vp[k] = g - s * (h + g * tau);
          vq[k] = h + s * (g - h * tau);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    const auto v = vt.row(order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v[r];
  }
  return out;
}

}  // namespace heatline
