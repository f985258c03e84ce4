#include <doctest.h>

#include <cmath>

#include <heatline/channel.hpp>
#include <heatline/commands.hpp>

#include "../fixtures.hpp"
#include "../oracles.hpp"

using namespace heatline;

namespace {

const ModeSet& default_modes() {
  static const auto modes = [] {
    const auto channel = assemble_channel(fixture::default_potential_300());
    return build_mode_set(channel, fixture::default_report_300(), RitzOptions{}, 10, 100);
  }();
  return modes;
}

}  // namespace

TEST_CASE("channel potential is separable with the centrifugal term") {
  const auto g = Grid::uniform(10);
  const PotentialSamples zero{g, std::vector<double>(g.size(), 0.0)};
  const ChannelPotential flat(zero, zero);
  for (double rho : {0.1, 1.0, 3.0}) CHECK(flat(1.0, rho) == doctest::Approx(0.25 / (rho * rho)));
  CHECK_THROWS_AS(flat(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(flat(1.0, -0.5), std::invalid_argument);

  const auto ch = assemble_channel(fixture::default_potential_300());
  const auto& q = fixture::default_potential_300();
  CHECK(ch(kPi / 2, kPi / 2) ==
        doctest::Approx(2 * q.interpolate(kPi / 2) + 1.0 / (kPi * kPi)).epsilon(1e-14));
  // q(s1, r) - q(s2, r) does not depend on r
  const double d1 = ch(0.4, 0.7) - ch(2.1, 0.7);
  const double d2 = ch(0.4, 2.9) - ch(2.1, 2.9);
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
}

TEST_CASE("combined spectrum ordering") {
  const std::vector<double> nu = {0.0, 11.0, 14.0};
  const auto c = combine_spectra(nu, nu, 9);
  const double expect[9] = {0, 11, 11, 14, 14, 22, 25, 25, 28};
  REQUIRE(c.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(c[i].lambda == expect[i]);
  CHECK(c[1].radial == 1);
  CHECK(c[1].axial == 2);
  CHECK(c[2].radial == 2);
  CHECK(c[2].axial == 1);

  const std::vector<double> mu = {0.0};
  const std::vector<double> ax = {0.0, 11.0};
  const auto d = combine_spectra(ax, mu, 5);
  REQUIRE(d.size() == 2);
  CHECK(d[0].lambda == 0.0);
  CHECK(d[1].lambda == 11.0);
}

TEST_CASE("first mode satisfies the boundary conditions") {
  const auto& modes = default_modes();
  for (double rho : {0.3, 1.5, 2.8}) CHECK(std::fabs(first_mode(modes, 0.0, rho)) <= 1e-12);
  for (double s : {0.3, 1.5, 2.8}) {
    CHECK(std::fabs(first_mode(modes, s, kPi)) <= 1e-12);
    CHECK(first_mode(modes, s, 1.0) == doctest::Approx(modes.mode(1, s, 1.0)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(first_mode(modes, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("radial mode uses the slope limit near the axis") {
  const auto& modes = default_modes();
  const double slope = modes.radial()[0].slope_at_zero();
  CHECK(modes.radial_mode(1, 1e-10) == doctest::Approx(std::sqrt(1e-10) * slope).epsilon(1e-14));
  CHECK(modes.radial_mode(1, 1e-5) == doctest::Approx(std::sqrt(1e-5) * slope).epsilon(1e-4));
}

TEST_CASE("concentration of simple profiles") {
  CHECK(concentration_metric([](double r) { return r < kPi / 2 ? std::sin(2 * r) : 0.0; }) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concentration_metric([](double) { return 1.0; }) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("ground mode concentrates near the axis") {
  const double c = concentration_metric(default_modes());
  CHECK(c > 0.5);
  // Numerov eigenfunction of the radial equation: v^2 rho = psi^2
  const auto& q = fixture::default_potential_300();
  const auto nu = oracle::numerov_eigenvalues(q.values, 1);
  const auto psi = oracle::numerov_eigenfunction(q.values, nu[0]);
  const double h = kPi / 300;
  double inner = 0.0;
  double total = 0.0;
  for (std::size_t i = 1; i < psi.size(); ++i) {
    const double seg = 0.5 * h * (psi[i] * psi[i] + psi[i - 1] * psi[i - 1]);
    total += seg;
    if (i <= 150) inner += seg;
  }
  CHECK(c == doctest::Approx(inner / total).epsilon(1e-2));
}

TEST_CASE("heat series started from the first mode stays on it") {
  const auto& modes = default_modes();
  const SeparableInitialData f{[&](double s) { return modes.axial_mode(1, s); },
                               [&](double rho) { return modes.radial_mode(1, rho); }};
  const HeatSeries series(modes, f, 30);
  CHECK(series.coefficients()[0] == doctest::Approx(1.0).epsilon(1e-4));
  for (std::size_t n = 1; n < 30; ++n) CHECK(std::fabs(series.coefficients()[n]) <= 1e-4);
  const double t = 1.0;
  for (double s : {0.5, 1.5}) {
    for (double rho : {0.5, 1.5}) {
      CHECK(series(s, rho, t) ==
            doctest::Approx(std::exp(-series.lambda(1) * t) * first_mode(modes, s, rho)).epsilon(1e-3));
    }
  }
}

TEST_CASE("truncated series approaches the initial data") {
  const auto& modes = default_modes();
  const auto f = default_initial_data();
  // ||u_T(0) - f|| with weight rho, midpoint rule on a 160 x 160 grid
  auto gap = [&](std::size_t truncation) {
    const HeatSeries series(modes, f, truncation);
    const int p = 160;
    const double h = kPi / p;
    double sum = 0.0;
    for (int i = 0; i < p; ++i) {
      const double s = (i + 0.5) * h;
      for (int k = 0; k < p; ++k) {
        const double rho = (k + 0.5) * h;
        const double d = series(s, rho, 0.0) - f(s, rho);
        sum += d * d * rho * h * h;
      }
    }
    return std::sqrt(sum);
  };
  double prev = gap(1);
  for (std::size_t t : {4u, 16u, 64u}) {
    const double g = gap(t);
    CHECK(g < prev);
    prev = g;
  }
}

TEST_CASE("residual stays under the analytic decay bound") {
  const auto& modes = default_modes();
  const HeatSeries series(modes, default_initial_data(), 50);
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    CHECK(series.residual_norm(t) <= series.residual_bound(t) * (1 + 1e-9));
  }
  CHECK(series.residual_norm(2.0) < series.residual_norm(0.5));

  // ||f|| with weight rho, separable trapezoid
  const auto f = default_initial_data();
  const int p = 4000;
  const double h = kPi / p;
  double gs = 0.0;
  double rs = 0.0;
  for (int i = 0; i <= p; ++i) {
    const double x = i * h;
    const double w = (i == 0 || i == p) ? 0.5 * h : h;
    gs += w * f.axial(x) * f.axial(x);
    rs += w * f.radial(x) * f.radial(x) * x;
  }
  const double fnorm = std::sqrt(gs * rs);
  CHECK(series.residual_norm(1.0) <= fnorm * std::exp(-series.lambda(2)));
  CHECK_THROWS_AS(HeatSeries(modes, default_initial_data(), 0), std::invalid_argument);
  CHECK_THROWS_AS(HeatSeries(modes, default_initial_data(), 101), std::invalid_argument);
  CHECK_THROWS_AS(series(1.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("free channel has lambda_1 = 2 and equal axes") {
  const auto q = construct_potential(TargetSpectrum{}, Grid::uniform(40));
  const auto modes = build_mode_set(assemble_channel(q), TargetSpectrum{}, RitzOptions{}, 5, 10);
  CHECK(modes.combined()[0].lambda == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(modes.combined()[1].lambda == doctest::Approx(5.0).epsilon(1e-10));
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(modes.axial()[k].eigenvalue == modes.radial()[k].eigenvalue);
  }
  // smallest sums n^2 + m^2 with n, m in 1..5
  const double sums[10] = {2, 5, 5, 8, 10, 10, 13, 13, 17, 17};
  for (int i = 0; i < 10; ++i) {
    CHECK(modes.combined()[i].lambda == doctest::Approx(sums[i]).epsilon(1e-10));
  }
}

TEST_CASE("channel eigenvalues at the default resolution") {
  const auto& modes = default_modes();
  const auto& report = fixture::default_report_300();
  CHECK(std::fabs(modes.combined()[0].lambda) <= 2 * report.ground_abs_error);
  CHECK(modes.combined()[1].lambda == doctest::Approx(11.0).epsilon(0.01));
}
