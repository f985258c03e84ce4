#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <heatline/gl_solver.hpp>
#include <heatline/ritz.hpp>

namespace heatline {

/// Separable potential q(s, rho) = Q_axial(s) + 1/(4 rho^2) + Q_radial(rho)
/// on [0, pi] x (0, pi]. Both parts use linear interpolation between samples.
class ChannelPotential {
 public:
  ChannelPotential(PotentialSamples axial, PotentialSamples radial);

  const PotentialSamples& axial() const { return axial_; }
  const PotentialSamples& radial() const { return radial_; }

  /// Throws std::invalid_argument for rho <= 0.
  double operator()(double s, double rho) const;

 private:
  PotentialSamples axial_;
  PotentialSamples radial_;
};

/// The same constructed Q serves as axial and radial part.
ChannelPotential assemble_channel(const PotentialSamples& q);

/// A 1-D Dirichlet mode on [0, pi] expanded in sqrt(2/pi) sin(nx).
struct SineMode {
  double eigenvalue = 0.0;
  std::vector<double> coefficients;

  double value(double x) const;
  /// d/dx at x = 0: sum_n c_n sqrt(2/pi) n.
  double slope_at_zero() const;
};

/// First `count` Ritz modes, each oriented so that int_0^pi mode > 0 (or,
/// when that integral vanishes, its largest coefficient is positive).
std::vector<SineMode> modes_from_report(const RitzReport& report, std::size_t count);

struct CombinedEigenvalue {
  double lambda = 0.0;
  std::size_t radial = 1;  // m, 1-based
  std::size_t axial = 1;   // l, 1-based
};

/// The `count` smallest sums mu_m + nu_l, ascending; ties ordered by (m, l).
std::vector<CombinedEigenvalue> combine_spectra(std::span<const double> axial,
                                                std::span<const double> radial,
                                                std::size_t count);

/// Axial modes w_l(s), radial modes psi_m(rho) with v_m = psi_m / sqrt(rho),
/// and the combined spectrum lambda_n = mu_m + nu_l.
class ModeSet {
 public:
  ModeSet(std::vector<SineMode> axial, std::vector<SineMode> radial, std::size_t combined_count);

  const std::vector<SineMode>& axial() const { return axial_; }
  const std::vector<SineMode>& radial() const { return radial_; }
  const std::vector<CombinedEigenvalue>& combined() const { return combined_; }

  double axial_mode(std::size_t l, double s) const;
  /// v_m(rho); below rho = 1e-8 uses sqrt(rho) * psi_m'(0).
  double radial_mode(std::size_t m, double rho) const;
  /// phi_n(s, rho) for the n-th combined eigenvalue (1-based).
  double mode(std::size_t n, double s, double rho) const;

 private:
  std::vector<SineMode> axial_;
  std::vector<SineMode> radial_;
  std::vector<CombinedEigenvalue> combined_;
};

/// Runs the Ritz verifier on both parts of the channel and collects modes.
/// The radial decomposition is reused when radial and axial samples agree.
ModeSet build_mode_set(const ChannelPotential& channel, const TargetSpectrum& target,
                       const RitzOptions& options, std::size_t modes_per_axis,
                       std::size_t combined_count);

/// Same, reusing an already computed axial report.
ModeSet build_mode_set(const ChannelPotential& channel, const RitzReport& axial_report,
                       const RitzOptions& options, std::size_t modes_per_axis,
                       std::size_t combined_count);

/// phi_1(s, rho) = v_1(rho) w_1(s). Throws for rho <= 0.
double first_mode(const ModeSet& modes, double s, double rho);

/// int_0^split |v|^2 rho drho / int_0^pi |v|^2 rho drho, trapezoid on each side
/// of the split with `panels` intervals.
double concentration_metric(const std::function<double(double)>& v, double split = kPi / 2,
                            std::size_t panels = 2000);
double concentration_metric(const ModeSet& modes, double split = kPi / 2,
                            std::size_t panels = 2000);

/// Initial temperature f(s, rho) = g(s) r(rho).
struct SeparableInitialData {
  std::function<double(double)> axial;
  std::function<double(double)> radial;

  double operator()(double s, double rho) const { return axial(s) * radial(rho); }
};

/// Truncated eigen-series u(s, rho, t) = sum_n exp(-lambda_n t) (f, phi_n) phi_n.
class HeatSeries {
 public:
  /// Coefficients use trapezoid quadrature with `quadrature_panels`
  /// intervals in s and in rho (weight rho drho).
  HeatSeries(const ModeSet& modes, const SeparableInitialData& f, std::size_t truncation,
             std::size_t quadrature_panels = 2000);

  std::size_t truncation() const { return coefficients_.size(); }
  std::span<const double> coefficients() const { return coefficients_; }
  double lambda(std::size_t n) const { return modes_->combined()[n - 1].lambda; }

  double operator()(double s, double rho, double t) const;

  /// ||u(t) - (f, phi_1) phi_1||, exact in the orthonormal mode basis.
  double residual_norm(double t) const;
  /// (sum_{n>=2} |(f, phi_n)|^2)^{1/2} exp(-lambda_2 t).
  double residual_bound(double t) const;

 private:
  const ModeSet* modes_;
  std::vector<double> coefficients_;
};

}  // namespace heatline
