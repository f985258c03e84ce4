#include <heatline/channel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include <heatline/quadrature.hpp>

namespace heatline {

namespace {

constexpr double kNearAxis = 1e-8;

void require_positive_radius(double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("channel evaluation requires rho > 0");
}

std::vector<double> uniform_points(double lo, double hi, std::size_t panels) {
  std::vector<double> x(panels + 1);
  const double h = (hi - lo) / static_cast<double>(panels);
  for (std::size_t i = 0; i < panels; ++i) x[i] = lo + static_cast<double>(i) * h;
  x.back() = hi;
  return x;
}

}  // namespace

ChannelPotential::ChannelPotential(PotentialSamples axial, PotentialSamples radial)
    : axial_(std::move(axial)), radial_(std::move(radial)) {}

double ChannelPotential::operator()(double s, double rho) const {
  require_positive_radius(rho);
  return axial_.interpolate(s) + 1.0 / (4.0 * rho * rho) + radial_.interpolate(rho);
}

ChannelPotential assemble_channel(const PotentialSamples& q) { return ChannelPotential(q, q); }

double SineMode::value(double x) const {
  const double norm = std::sqrt(2.0 / kPi);
  double sum = 0.0;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    sum += coefficients[n] * std::sin(static_cast<double>(n + 1) * x);
  }
  return norm * sum;
}

double SineMode::slope_at_zero() const {
  double sum = 0.0;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    sum += coefficients[n] * static_cast<double>(n + 1);
  }
  return std::sqrt(2.0 / kPi) * sum;
}

std::vector<SineMode> modes_from_report(const RitzReport& report, std::size_t count) {
  const std::size_t n = report.basis_size;
  count = std::min(count, n);
  std::vector<SineMode> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    SineMode mode;
    mode.eigenvalue = report.eigenvalues[k];
    mode.coefficients.resize(n);
    double integral = 0.0;  // int_0^pi sin(nx) = 2/n for odd n
    std::size_t largest = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const double c = report.eigenvectors(r, k);
      mode.coefficients[r] = c;
      if ((r % 2) == 0) integral += 2.0 * c / static_cast<double>(r + 1);
      if (std::fabs(c) > std::fabs(mode.coefficients[largest])) largest = r;
    }
    const bool flip = std::fabs(integral) > 1e-12 ? integral < 0.0 : mode.coefficients[largest] < 0.0;
    if (flip) {
      for (auto& c : mode.coefficients) c = -c;
    }
    out.push_back(std::move(mode));
  }
  return out;
}

std::vector<CombinedEigenvalue> combine_spectra(std::span<const double> axial,
                                                std::span<const double> radial,
                                                std::size_t count) {
  std::vector<CombinedEigenvalue> all;
  all.reserve(axial.size() * radial.size());
  for (std::size_t m = 0; m < radial.size(); ++m) {
    for (std::size_t l = 0; l < axial.size(); ++l) {
      all.push_back({radial[m] + axial[l], m + 1, l + 1});
    }
  }
  std::sort(all.begin(), all.end(), [](const CombinedEigenvalue& x, const CombinedEigenvalue& y) {
    return std::tie(x.lambda, x.radial, x.axial) < std::tie(y.lambda, y.radial, y.axial);
  });
  if (all.size() > count) all.resize(count);
  return all;
}

ModeSet::ModeSet(std::vector<SineMode> axial, std::vector<SineMode> radial,
                 std::size_t combined_count)
    : axial_(std::move(axial)), radial_(std::move(radial)) {
  if (axial_.empty() || radial_.empty()) throw std::invalid_argument("ModeSet needs modes");
  std::vector<double> nu(axial_.size());
  std::vector<double> mu(radial_.size());
  for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = axial_[i].eigenvalue;
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = radial_[i].eigenvalue;
  combined_ = combine_spectra(nu, mu, combined_count);
}

double ModeSet::axial_mode(std::size_t l, double s) const { return axial_.at(l - 1).value(s); }

double ModeSet::radial_mode(std::size_t m, double rho) const {
  require_positive_radius(rho);
  const auto& mode = radial_.at(m - 1);
  if (rho < kNearAxis) return std::sqrt(rho) * mode.slope_at_zero();
  return mode.value(rho) / std::sqrt(rho);
}

double ModeSet::mode(std::size_t n, double s, double rho) const {
  const auto& c = combined_.at(n - 1);
  return radial_mode(c.radial, rho) * axial_mode(c.axial, s);
}

ModeSet build_mode_set(const ChannelPotential& channel, const TargetSpectrum& target,
                       const RitzOptions& options, std::size_t modes_per_axis,
                       std::size_t combined_count) {
  return build_mode_set(channel, verify_potential(channel.axial(), target, options), options,
                        modes_per_axis, combined_count);
}

ModeSet build_mode_set(const ChannelPotential& channel, const RitzReport& axial_report,
                       const RitzOptions& options, std::size_t modes_per_axis,
                       std::size_t combined_count) {
  auto axial = modes_from_report(axial_report, modes_per_axis);
  std::vector<SineMode> radial;
  if (channel.radial().grid == channel.axial().grid &&
      channel.radial().values == channel.axial().values) {
    radial = axial;
  } else {
    radial = modes_from_report(verify_potential(channel.radial(), axial_report.target, options),
                               modes_per_axis);
  }
  return ModeSet(std::move(axial), std::move(radial), combined_count);
}

double first_mode(const ModeSet& modes, double s, double rho) {
  return modes.radial_mode(1, rho) * modes.axial_mode(1, s);
}

double concentration_metric(const std::function<double(double)>& v, double split,
                            std::size_t panels) {
  if (!(split > 0.0 && split <= kPi)) throw std::invalid_argument("split must lie in (0, pi]");
  const auto energy = [&](double lo, double hi) {
    if (hi <= lo) return 0.0;
    const auto x = uniform_points(lo, hi, panels);
    std::vector<double> f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double val = x[i] > 0.0 ? v(x[i]) : 0.0;
      f[i] = val * val * x[i];
    }
    return trapezoid(x, f);
  };
  const double core = energy(0.0, split);
  const double total = core + energy(split, kPi);
  if (total == 0.0) throw std::invalid_argument("concentration_metric: zero mode");
  return core / total;
}

double concentration_metric(const ModeSet& modes, double split, std::size_t panels) {
  return concentration_metric([&](double rho) { return modes.radial_mode(1, rho); }, split,
                              panels);
}

HeatSeries::HeatSeries(const ModeSet& modes, const SeparableInitialData& f,
                       std::size_t truncation, std::size_t quadrature_panels)
    : modes_(&modes) {
  if (truncation == 0) throw std::invalid_argument("heat series truncation must be >= 1");
  if (truncation > modes.combined().size()) {
    throw std::invalid_argument("heat series truncation exceeds available modes");
  }
  const auto x = uniform_points(0.0, kPi, quadrature_panels);
  std::vector<double> gx(x.size());
  std::vector<double> rx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    gx[i] = f.axial(x[i]);
    rx[i] = x[i] > 0.0 ? f.radial(x[i]) : 0.0;
  }

  // (f, phi_n) = (int g w_l ds) (int r v_m rho drho); v_m rho = psi_m sqrt(rho).
  std::vector<double> axial_proj(modes.axial().size());
  std::vector<double> radial_proj(modes.radial().size());
  std::vector<double> integrand(x.size());
  for (std::size_t l = 0; l < axial_proj.size(); ++l) {
    for (std::size_t i = 0; i < x.size(); ++i) integrand[i] = gx[i] * modes.axial()[l].value(x[i]);
    axial_proj[l] = trapezoid(x, integrand);
  }
  for (std::size_t m = 0; m < radial_proj.size(); ++m) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      integrand[i] = rx[i] * modes.radial()[m].value(x[i]) * std::sqrt(x[i]);
    }
    radial_proj[m] = trapezoid(x, integrand);
  }

  coefficients_.resize(truncation);
  for (std::size_t n = 0; n < truncation; ++n) {
    const auto& c = modes.combined()[n];
    coefficients_[n] = axial_proj[c.axial - 1] * radial_proj[c.radial - 1];
  }
}

double HeatSeries::operator()(double s, double rho, double t) const {
  require_positive_radius(rho);
  if (t < 0.0) throw std::invalid_argument("heat series needs t >= 0");
  std::vector<double> w(modes_->axial().size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> v(modes_->radial().size(), std::numeric_limits<double>::quiet_NaN());
  double u = 0.0;
  for (std::size_t n = 0; n < coefficients_.size(); ++n) {
    const auto& c = modes_->combined()[n];
    double& wl = w[c.axial - 1];
    double& vm = v[c.radial - 1];
    if (std::isnan(wl)) wl = modes_->axial_mode(c.axial, s);
    if (std::isnan(vm)) vm = modes_->radial_mode(c.radial, rho);
    u += std::exp(-c.lambda * t) * coefficients_[n] * wl * vm;
  }
  return u;
}

double HeatSeries::residual_norm(double t) const {
  double sum = 0.0;
  for (std::size_t n = 1; n < coefficients_.size(); ++n) {
    const double term = std::exp(-lambda(n + 1) * t) * coefficients_[n];
    sum += term * term;
  }
  return std::sqrt(sum);
}

double HeatSeries::residual_bound(double t) const {
  if (coefficients_.size() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t n = 1; n < coefficients_.size(); ++n) sum += coefficients_[n] * coefficients_[n];
  return std::sqrt(sum) * std::exp(-lambda(2) * t);
}

}  // namespace heatline
