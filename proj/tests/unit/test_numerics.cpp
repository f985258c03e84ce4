#include <doctest.h>

#include <cmath>
#include <random>

#include <heatline/grid.hpp>
#include <heatline/jacobi.hpp>
#include <heatline/linalg.hpp>
#include <heatline/quadrature.hpp>
#include <heatline/spectral_data.hpp>

#include "../oracles.hpp"

using namespace heatline;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  const auto rule = gauss_legendre(8);
  REQUIRE(rule.nodes.size() == 8);
  double w = 0.0;
  for (double v : rule.weights) w += v;
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  for (int p = 0; p <= 15; ++p) {
    double s = 0.0;
    for (std::size_t i = 0; i < 8; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
    const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
    CHECK(s == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("trapezoid is exact for linear data and second order otherwise") {
  std::vector<double> x = {0.0, 0.5, 1.5, 2.0};
  std::vector<double> f;
  for (double v : x) f.push_back(3 * v + 1);
  CHECK(trapezoid(x, f) == doctest::Approx(8.0).epsilon(1e-15));

  auto err = [](int m) {
    std::vector<double> xs, fs;
    for (int i = 0; i <= m; ++i) {
      xs.push_back(kPi * i / m);
      fs.push_back(std::sin(xs.back()));
    }
    return std::fabs(trapezoid(xs, fs) - 2.0);
  };
  CHECK(err(50) / err(100) == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("partial pivoting solves and detects singular systems") {
  Matrix a(3, 3);
  const double vals[9] = {0, 2, 1, 1, 1, 1, 2, 1, 3};
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = vals[i];
  const std::vector<double> x = {1.0, -2.0, 0.5};
  const auto b = multiply(a, x);
  const auto sol = solve_partial_pivot(a, b);
  for (int i = 0; i < 3; ++i) CHECK(sol[i] == doctest::Approx(x[i]).epsilon(1e-14));

  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_THROWS_AS(solve_partial_pivot(s, {1.0, 2.0}), SingularMatrixError);
}

TEST_CASE("uniform grids") {
  const auto g2 = Grid::uniform(2);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0] == 0.0);
  CHECK(g2[1] == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(g2[2] == kPi);

  const auto g = Grid::uniform(100);
  CHECK(g.size() == 101);
  CHECK(g.intervals() == 100);
  for (std::size_t i = 1; i < g.size(); ++i) {
    CHECK(g[i] - g[i - 1] == doctest::Approx(kPi / 100).epsilon(1e-12));
  }
  CHECK(g[100] == kPi);
  const auto g4 = Grid::uniform(4);
  for (std::size_t i = 1; i < g4.size(); ++i) {
    CHECK(g4[i] - g4[i - 1] == doctest::Approx(kPi / 4).epsilon(1e-14));
  }
  CHECK_THROWS_AS(Grid::uniform(1), std::invalid_argument);
}

TEST_CASE("two-zone grids store the split once") {
  const auto g = Grid::two_zone(1, 1, kPi / 2);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == kPi / 2);
  CHECK(Grid::two_zone(50, 75).size() == 126);
  CHECK(Grid::two_zone(50, 100).size() == 151);
  const auto z = Grid::two_zone(50, 75);
  CHECK(z[50] == doctest::Approx(0.9 * kPi).epsilon(1e-15));
  CHECK(z[1] - z[0] > z[51] - z[50]);
  CHECK_THROWS_AS(Grid::two_zone(5, 5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid::two_zone(5, 5, kPi), std::invalid_argument);
  CHECK_THROWS_AS(Grid::two_zone(0, 5), std::invalid_argument);
}

TEST_CASE("arbitrary grids are validated") {
  CHECK_NOTHROW(Grid::from_points({0.0, 1.0, kPi}));
  CHECK_THROWS_AS(Grid::from_points({0.0, kPi}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::from_points({0.1, 1.0, kPi}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::from_points({0.0, 1.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::from_points({0.0, 2.0, 1.0, kPi}), std::invalid_argument);
}

namespace {

Matrix from_rows(std::size_t n, std::initializer_list<double> v) {
  Matrix m(n, n);
  std::size_t k = 0;
  for (double x : v) {
    m(k / n, k % n) = x;
    ++k;
  }
  return m;
}

Matrix random_symmetric(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("Jacobi on small fixed matrices") {
  const auto d = jacobi_eigen(from_rows(3, {1, 0, 0, 0, 4, 0, 0, 0, 9}));
  CHECK(d.values == std::vector<double>{1, 4, 9});
  CHECK(d.vectors == Matrix::identity(3));

  const auto two = jacobi_eigen(from_rows(2, {2, 1, 1, 2}));
  CHECK(two.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(two.values[1] == doctest::Approx(3.0).epsilon(1e-14));

  // 20-digit references
  const auto four = jacobi_eigen(from_rows(4, {4, 1, -2, 2, 1, 2, 0, 1, -2, 0, 3, -2, 2, 1, -2, -1}));
  const double ref[4] = {-2.1975169774394248133, 1.0843644637732169887, 2.2685314064312420364,
                         6.8446211072349657881};
  for (int i = 0; i < 4; ++i) CHECK(four.values[i] == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("Jacobi agrees with inertia bisection and returns orthonormal vectors") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto a = random_symmetric(10, seed);
    const auto d = jacobi_eigen(a);
    const auto ref = oracle::inertia_eigenvalues(a.data(), 10);
    for (std::size_t k = 0; k < 10; ++k) CHECK(std::fabs(d.values[k] - ref[k]) <= 1e-8);
    for (std::size_t k = 1; k < 10; ++k) CHECK(d.values[k - 1] <= d.values[k]);
    for (std::size_t p = 0; p < 10; ++p) {
      for (std::size_t q = 0; q < 10; ++q) {
        double dot = 0.0;
        for (std::size_t r = 0; r < 10; ++r) dot += d.vectors(r, p) * d.vectors(r, q);
        CHECK(std::fabs(dot - (p == q ? 1.0 : 0.0)) <= 1e-8);
      }
      // A v = lambda v
      for (std::size_t r = 0; r < 10; ++r) {
        double av = 0.0;
        for (std::size_t c = 0; c < 10; ++c) av += a(r, c) * d.vectors(c, p);
        CHECK(std::fabs(av - d.values[p] * d.vectors(r, p)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("Jacobi reports non-convergence and rejects bad input") {
  CHECK_THROWS_AS(jacobi_eigen(random_symmetric(12, 7), 1e-10, 1), JacobiConvergenceError);
  auto a = random_symmetric(4, 9);
  a(0, 1) += 1e-3;
  CHECK_THROWS_AS(jacobi_eigen(a), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigen(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("off-diagonal norm") {
  CHECK(off_diagonal_norm(from_rows(2, {5, 3, 4, 7})) == doctest::Approx(5.0).epsilon(1e-15));
}
