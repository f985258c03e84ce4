#include <heatline/gl_solver.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <heatline/quadrature.hpp>

namespace heatline {

namespace {

constexpr std::size_t kGaussNodes = 8;
constexpr double kMaxSubPanel = 0.05;
constexpr double kPivotFloor = 1e-12;

const GaussLegendreRule& panel_rule() {
  static const GaussLegendreRule rule = gauss_legendre(kGaussNodes);
  return rule;
}

void accumulate_point(const KernelTermList& terms, double x, double w, Matrix& a) {
  const std::size_t r = terms.rank();
  for (std::size_t m = 0; m < r; ++m) {
    const double am = w * terms[m].a(x);
    if (am == 0.0) continue;
    for (std::size_t j = 0; j < r; ++j) a(m, j) += am * terms[j].b(x);
  }
}

}  // namespace

GramRule parse_gram_rule(const std::string& name) {
  if (name == "gauss-legendre" || name == "gauss_legendre") return GramRule::gauss_legendre;
  if (name == "trapezoid") return GramRule::trapezoid;
  throw std::invalid_argument("unknown Gram quadrature rule: " + name);
}

std::string to_string(GramRule rule) {
  return rule == GramRule::trapezoid ? "trapezoid" : "gauss-legendre";
}

GramAccumulator::GramAccumulator(const KernelTermList& terms, const Grid& grid, GramRule rule)
    : terms_(&terms), grid_(&grid), rule_(rule), value_(terms.rank(), terms.rank()) {}

void GramAccumulator::advance() {
  if (index_ + 1 >= grid_->size()) throw std::out_of_range("GramAccumulator: past end of grid");
  const double lo = (*grid_)[index_];
  const double hi = (*grid_)[index_ + 1];

  if (rule_ == GramRule::trapezoid) {
    const double h = hi - lo;
    accumulate_point(*terms_, lo, 0.5 * h, value_);
    accumulate_point(*terms_, hi, 0.5 * h, value_);
  } else {
    const auto& gl = panel_rule();
    const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / kMaxSubPanel)));
    const double width = (hi - lo) / static_cast<double>(pieces);
    for (std::size_t p = 0; p < pieces; ++p) {
      const double a = lo + static_cast<double>(p) * width;
      const double mid = a + 0.5 * width;
      for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
        accumulate_point(*terms_, mid + 0.5 * width * gl.nodes[k], 0.5 * width * gl.weights[k],
                         value_);
      }
    }
  }
  ++index_;
}

Matrix gram_integrals(const KernelTermList& terms, const Grid& grid, std::size_t index,
                      GramRule rule) {
  if (index >= grid.size()) throw std::out_of_range("gram_integrals: index outside grid");
  GramAccumulator acc(terms, grid, rule);
  while (acc.index() < index) acc.advance();
  return acc.value();
}

SingularSystemError::SingularSystemError(std::size_t grid_index, double s,
                                         const std::string& detail)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "singular Gel'fand-Levitan system at grid point " << grid_index << " (s = " << s
           << "): " << detail;
        return os.str();
      }()),
      grid_index_(grid_index),
      s_(s) {}

PsiSolution solve_psi_systems(const KernelTermList& terms, const Grid& grid, GramRule rule) {
  const std::size_t r = terms.rank();
  const std::size_t n = grid.size();
  PsiSolution out;
  out.rank = r;
  out.psi.assign(n * r, 0.0);
  out.dpsi.assign(n * r, 0.0);
  if (r == 0) return out;

  // Sequential cumulative pass; the per-point solves below only read these.
  std::vector<Matrix> gram;
  gram.reserve(n);
  GramAccumulator acc(terms, grid, rule);
  gram.push_back(acc.value());
  for (std::size_t i = 1; i < n; ++i) {
    acc.advance();
    gram.push_back(acc.value());
  }

  std::vector<double> a(r), ap(r), b(r);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = grid[i];
    for (std::size_t j = 0; j < r; ++j) {
      a[j] = terms[j].a(s);
      ap[j] = terms[j].a_prime(s);
      b[j] = terms[j].b(s);
    }
    const Matrix& g = gram[i];
    Matrix lhs = g;
    for (std::size_t j = 0; j < r; ++j) lhs(j, j) += 1.0;

    std::vector<double> rhs = multiply(g, a);
    for (auto& v : rhs) v = -v;

    std::vector<double> psi;
    try {
      psi = solve_partial_pivot(lhs, rhs, kPivotFloor);
    } catch (const SingularMatrixError& e) {
      throw SingularSystemError(i, s, e.what());
    }

    double coupling = 0.0;  // sum_j (a_j + psi_j) b_j
    for (std::size_t j = 0; j < r; ++j) coupling += (a[j] + psi[j]) * b[j];
    std::vector<double> drhs = multiply(g, ap);
    for (std::size_t m = 0; m < r; ++m) drhs[m] = -drhs[m] - a[m] * coupling;

    std::vector<double> dpsi;
    try {
      dpsi = solve_partial_pivot(std::move(lhs), std::move(drhs), kPivotFloor);
    } catch (const SingularMatrixError& e) {
      throw SingularSystemError(i, s, e.what());
    }

    std::copy(psi.begin(), psi.end(), out.psi.begin() + static_cast<std::ptrdiff_t>(i * r));
    std::copy(dpsi.begin(), dpsi.end(), out.dpsi.begin() + static_cast<std::ptrdiff_t>(i * r));
  }
  return out;
}

double PotentialSamples::interpolate(double x) const {
  const auto pts = grid.points();
  if (x <= pts.front()) return values.front();
  if (x >= pts.back()) return values.back();
  const auto it = std::upper_bound(pts.begin(), pts.end(), x);
  const auto hi = static_cast<std::size_t>(it - pts.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - pts[lo]) / (pts[hi] - pts[lo]);
  return (1.0 - t) * values[lo] + t * values[hi];
}

PotentialSamples recover_potential(const KernelTermList& terms, const PsiSolution& psi,
                                   const Grid& grid) {
  const std::size_t r = terms.rank();
  PotentialSamples out{grid, std::vector<double>(grid.size(), 0.0)};
  if (r == 0) return out;
  if (psi.rank != r || psi.points() != grid.size()) {
    throw std::invalid_argument("recover_potential: psi solution does not match grid/terms");
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    const auto p = psi.psi_at(i);
    const auto dp = psi.dpsi_at(i);
    double k_s = 0.0;
    double k_t = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      const auto& t = terms[j];
      k_s -= (t.a_prime(s) + dp[j]) * t.b(s);
      k_t -= (t.a(s) + p[j]) * t.b_prime(s);
    }
    out.values[i] = 2.0 * (k_s + k_t);
  }
  return out;
}

PotentialSamples construct_potential(const TargetSpectrum& spec, const Grid& grid,
                                     GramRule rule) {
  const auto terms = build_kernel_terms(spec);
  const auto psi = solve_psi_systems(terms, grid, rule);
  return recover_potential(terms, psi, grid);
}

}  // namespace heatline
