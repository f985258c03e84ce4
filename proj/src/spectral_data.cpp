#include <heatline/spectral_data.hpp>

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace heatline {

namespace {

const SpectralEntry* find_entry(const TargetSpectrum& spec, int j) {
  for (const auto& e : spec.perturbed) {
    if (e.index == j) return &e;
  }
  return nullptr;
}

}  // namespace

double TargetSpectrum::eigenvalue(int j) const {
  if (j < 1) throw std::invalid_argument("spectral index must be >= 1");
  if (const auto* e = find_entry(*this, j)) return e->nu;
  return static_cast<double>(j) * static_cast<double>(j);
}

double TargetSpectrum::normalizer(int j) const {
  if (j < 1) throw std::invalid_argument("spectral index must be >= 1");
  if (const auto* e = find_entry(*this, j)) return e->alpha;
  return kFreeNormalizer;
}

std::vector<double> TargetSpectrum::eigenvalues(std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = eigenvalue(static_cast<int>(j + 1));
  return out;
}

void TargetSpectrum::validate() const {
  if (std::fabs(interval_length - kPi) > 1e-12) {
    throw std::invalid_argument("only the interval [0, pi] is supported");
  }
  int last_index = 0;
  for (const auto& e : perturbed) {
    if (e.index <= last_index) {
      throw std::invalid_argument("perturbed indices must be >= 1 and strictly increasing");
    }
    if (!(e.alpha > 0.0) || !std::isfinite(e.alpha)) {
      throw std::invalid_argument("normalizer alpha must be positive (index " +
                                  std::to_string(e.index) + ")");
    }
    if (!std::isfinite(e.nu)) {
      throw std::invalid_argument("eigenvalue must be finite (index " + std::to_string(e.index) + ")");
    }
    last_index = e.index;
  }
  // Past the last perturbed index the free spectrum is strictly increasing,
  // so checking one step beyond it is enough.
  for (int j = 1; j <= last_index; ++j) {
    if (!(eigenvalue(j) < eigenvalue(j + 1))) {
      throw std::invalid_argument("merged spectrum must be strictly increasing (index " +
                                  std::to_string(j) + ")");
    }
  }
}

TargetSpectrum default_target_spectrum() {
  TargetSpectrum spec;
  spec.perturbed = {
      {1, 0.0, kZeroModeNormalizer},
      {2, 11.0, kFreeNormalizer},
      {3, 14.0, kFreeNormalizer},
  };
  return spec;
}

TargetSpectrum load_target_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spectrum file: " + path.string());

  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed spectrum file " + path.string() + ": " + e.what());
  }

  TargetSpectrum spec;
  if (!doc.contains("eigenvalues") || !doc["eigenvalues"].is_array()) {
    throw std::invalid_argument("spectrum file needs an \"eigenvalues\" array");
  }
  for (const auto& rec : doc["eigenvalues"]) {
    if (!rec.contains("index") || !rec.contains("nu")) {
      throw std::invalid_argument("spectrum record needs \"index\" and \"nu\"");
    }
    SpectralEntry e;
    e.index = rec["index"].get<int>();
    e.nu = rec["nu"].get<double>();
    if (rec.contains("alpha")) {
      e.alpha = rec["alpha"].get<double>();
    } else {
      e.alpha = (e.nu == 0.0) ? kZeroModeNormalizer : kFreeNormalizer;
    }
    spec.perturbed.push_back(e);
  }
  spec.validate();
  return spec;
}

double KernelBasis::value(double x) const {
  return frequency > 0.0 ? std::sin(frequency * x) : x;
}

double KernelBasis::derivative(double x) const {
  return frequency > 0.0 ? frequency * std::cos(frequency * x) : 1.0;
}

KernelTermList build_kernel_terms(const TargetSpectrum& spec) {
  for (const auto& e : spec.perturbed) {
    if (e.nu < 0.0) {
      throw std::invalid_argument("negative eigenvalue at index " + std::to_string(e.index));
    }
  }
  spec.validate();

  std::vector<KernelTerm> terms;
  terms.reserve(2 * spec.perturbed.size());
  for (const auto& e : spec.perturbed) {
    if (e.nu == 0.0) {
      terms.push_back({1.0 / e.alpha, KernelBasis{0.0}});
    } else {
      terms.push_back({1.0 / (e.alpha * e.nu), KernelBasis{std::sqrt(e.nu)}});
    }
  }
  for (const auto& e : spec.perturbed) {
    terms.push_back({-2.0 / kPi, KernelBasis{static_cast<double>(e.index)}});
  }
  return KernelTermList(std::move(terms));
}

double eval_L(const KernelTermList& terms, double x, double y) {
  double sum = 0.0;
  for (const auto& t : terms.terms()) sum += t.a(x) * t.b(y);
  return sum;
}

}  // namespace heatline
