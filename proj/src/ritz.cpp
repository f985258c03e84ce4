#include <heatline/ritz.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <heatline/quadrature.hpp>

namespace heatline {

std::vector<double> cosine_moments(const PotentialSamples& q, std::size_t kmax) {
  const auto x = q.grid.points();
  std::vector<double> out(kmax + 1);
  std::vector<double> f(x.size());
  for (std::size_t k = 0; k <= kmax; ++k) {
    const auto kd = static_cast<double>(k);
    for (std::size_t i = 0; i < x.size(); ++i) f[i] = q.values[i] * std::cos(kd * x[i]);
    out[k] = trapezoid(x, f) / kPi;
  }
  return out;
}

RitzMatrix assemble_ritz_matrix(std::span<const double> moments, std::size_t n) {
  if (n == 0) throw std::invalid_argument("Ritz basis size must be >= 1");
  if (moments.size() < 2 * n + 1) {
    throw std::invalid_argument("assemble_ritz_matrix: need cosine moments up to 2N");
  }
  RitzMatrix out{n, Matrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const std::size_t nn = r + 1;
      const std::size_t mm = c + 1;
      double v = moments[mm - nn] - moments[nn + mm];
      if (r == c) v += static_cast<double>(nn * nn);
      out.p(r, c) = v;
      out.p(c, r) = v;
    }
  }
  return out;
}

RitzMatrix assemble_ritz_matrix(const PotentialSamples& q, std::size_t n) {
  return assemble_ritz_matrix(cosine_moments(q, 2 * n), n);
}

ErrorSummary relative_error(std::span<const double> computed, const TargetSpectrum& target,
                            std::size_t compare_count) {
  if (compare_count > computed.size()) {
    throw std::invalid_argument("compare count exceeds the number of computed eigenvalues");
  }
  ErrorSummary out;
  out.per_eigenvalue.resize(compare_count);
  for (std::size_t i = 0; i < compare_count; ++i) {
    const int j = static_cast<int>(i + 1);
    const double nu = target.eigenvalue(j);
    const double diff = std::fabs(computed[i] - nu);
    if (j == 1) out.ground_abs_error = diff;
    if (nu == 0.0) {
      if (j >= 2) {
        throw std::invalid_argument("target eigenvalue " + std::to_string(j) +
                                    " is zero; relative error undefined");
      }
      out.per_eigenvalue[i] = diff;
      continue;
    }
    const double rel = diff / std::fabs(nu);
    out.per_eigenvalue[i] = rel;
    out.delta = std::max(out.delta, rel);
  }
  return out;
}

std::size_t resolve_basis_size(const RitzOptions& options, const Grid& grid) {
  return options.basis_size != 0 ? options.basis_size : grid.intervals();
}

std::size_t resolve_compare_count(const RitzOptions& options, std::size_t basis_size) {
  return options.compare_count != 0 ? options.compare_count : std::min<std::size_t>(basis_size, 20);
}

RitzReport verify_potential(const PotentialSamples& q, const TargetSpectrum& target,
                            const RitzOptions& options) {
  const std::size_t n = resolve_basis_size(options, q.grid);
  const std::size_t j = resolve_compare_count(options, n);
  if (j > n) throw std::invalid_argument("compare count J must not exceed basis size N");

  const auto matrix = assemble_ritz_matrix(q, n);
  auto eig = jacobi_eigen(matrix.p, options.jacobi_tol, options.max_sweeps);
  const auto err = relative_error(eig.values, target, j);

  RitzReport report;
  report.basis_size = n;
  report.eigenvalues = std::move(eig.values);
  report.eigenvectors = std::move(eig.vectors);
  report.target = target;
  report.delta = err.delta;
  report.ground_abs_error = err.ground_abs_error;
  report.per_eigenvalue_errors = err.per_eigenvalue;
  report.sweeps = eig.sweeps;
  return report;
}

namespace {

// int_{x0}^{x1} (y0 + slope (x - x0)) cos(kx) dx
double line_cosine_integral(double x0, double x1, double y0, double y1, double k) {
  if (x1 == x0) return 0.0;
  if (k == 0.0) return 0.5 * (y0 + y1) * (x1 - x0);
  const double slope = (y1 - y0) / (x1 - x0);
  const auto antiderivative = [&](double x) {
    return (y0 + slope * (x - x0)) * std::sin(k * x) / k + slope * std::cos(k * x) / (k * k);
  };
  return antiderivative(x1) - antiderivative(x0);
}

}  // namespace

std::vector<double> linearized_cosine_moments(const PotentialSamples& q, std::size_t kmax) {
  const auto x = q.grid.points();
  const auto& v = q.values;
  const auto imax = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  const auto imin = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  if (imax >= imin) {
    throw DegenerateShapeError("linearized moments need argmax Q before argmin Q (argmax index " +
                               std::to_string(imax) + ", argmin index " + std::to_string(imin) +
                               ")");
  }
  const std::size_t last = x.size() - 1;

  std::vector<double> out(kmax + 1);
  std::vector<double> f(imax + 1);
  const auto head = x.subspan(0, imax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const auto kd = static_cast<double>(k);
    for (std::size_t i = 0; i <= imax; ++i) f[i] = v[i] * std::cos(kd * x[i]);
    const double i1 = trapezoid(head, f);
    const double i2 = line_cosine_integral(x[imax], x[imin], v[imax], v[imin], kd);
    const double i3 = line_cosine_integral(x[imin], x[last], v[imin], v[last], kd);
    out[k] = (i1 + i2 + i3) / kPi;
  }
  return out;
}

LinearizedDiagnostic linearized_qtilde_diagnostic(const PotentialSamples& q, std::size_t n) {
  const auto linear = linearized_cosine_moments(q, 2 * n);
  const auto p1 = assemble_ritz_matrix(q, n);
  const auto p2 = assemble_ritz_matrix(linear, n);

  LinearizedDiagnostic out;
  const auto& v = q.values;
  out.argmax = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  out.argmin = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  out.x_max = q.grid[out.argmax];
  out.x_min = q.grid[out.argmin];
  out.relative_error = Matrix(n, n);
  out.min_error = std::numeric_limits<double>::infinity();
  out.max_error = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double ref = p1.p(r, c);
      if (ref == 0.0) {
        ++out.skipped_entries;
        continue;
      }
      const double e = std::fabs(ref - p2.p(r, c)) / std::fabs(ref);
      out.relative_error(r, c) = e;
      out.min_error = std::min(out.min_error, e);
      out.max_error = std::max(out.max_error, e);
    }
  }
  if (out.skipped_entries == n * n) out.min_error = 0.0;
  return out;
}

}  // namespace heatline
