#pragma once

#include <cstddef>
#include <filesystem>
#include <numbers>
#include <span>
#include <vector>

namespace heatline {

inline constexpr double kPi = std::numbers::pi;

/// Free Dirichlet normalizer on [0, pi] for nu > 0.
inline constexpr double kFreeNormalizer = kPi / 2.0;

/// Normalizer of the nu = 0 mode, whose eigenfunction is x: ||x||^2 on [0, pi].
inline constexpr double kZeroModeNormalizer = kPi * kPi * kPi / 3.0;

/// One prescribed eigenvalue that differs from the free spectrum nu_j = j^2.
struct SpectralEntry {
  int index = 1;     // j >= 1
  double nu = 0.0;   // eigenvalue nu_j
  double alpha = kFreeNormalizer;
};

/// Target Dirichlet spectrum on [0, pi]: a finite set of perturbed entries,
/// every other index keeps the free values nu_j = j^2, alpha_j = pi/2.
struct TargetSpectrum {
  std::vector<SpectralEntry> perturbed;
  double interval_length = kPi;

  /// Merged eigenvalue for index j >= 1.
  double eigenvalue(int j) const;
  /// Merged normalizer for index j >= 1.
  double normalizer(int j) const;

  /// First `count` merged eigenvalues, nu_1 ... nu_count.
  std::vector<double> eigenvalues(std::size_t count) const;

  /// Throws std::invalid_argument if indices are not strictly increasing,
  /// an alpha is not positive, the merged spectrum is not strictly
  /// increasing, or the interval is not [0, pi].
  void validate() const;
};

/// nu = (0, 11, 14, 16, 25, ...), alpha_1 = pi^3/3, alpha_j = pi/2 otherwise.
TargetSpectrum default_target_spectrum();

/// Loads a spectrum from JSON:
///   {"eigenvalues": [{"index": 2, "nu": 11.0, "alpha": 1.5707963}, ...]}
/// A missing alpha defaults to pi/2, or pi^3/3 when nu == 0.
TargetSpectrum load_target_spectrum(const std::filesystem::path& path);

/// Basis function used by a kernel term: sin(frequency * x), or x when the
/// frequency is zero (the limit of sin(w x)/w).
struct KernelBasis {
  double frequency = 0.0;

  double value(double x) const;
  double derivative(double x) const;
};

/// A single rank-one piece a(x) b(y) of the kernel, with a = weight * basis
/// and b = basis.
struct KernelTerm {
  double weight = 0.0;
  KernelBasis basis;

  double a(double x) const { return weight * basis.value(x); }
  double a_prime(double x) const { return weight * basis.derivative(x); }
  double b(double y) const { return basis.value(y); }
  double b_prime(double y) const { return basis.derivative(y); }
};

/// Finite-rank factorization L(x, y) = sum_j a_j(x) b_j(y).
class KernelTermList {
 public:
  KernelTermList() = default;
  explicit KernelTermList(std::vector<KernelTerm> terms) : terms_(std::move(terms)) {}

  std::size_t rank() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const KernelTerm& operator[](std::size_t j) const { return terms_[j]; }
  std::span<const KernelTerm> terms() const { return terms_; }

 private:
  std::vector<KernelTerm> terms_;
};

/// Builds the Gel'fand-Levitan kernel for `spec`. Added terms come first in
/// the order of the perturbed entries, followed by the removed free terms:
///   nu > 0:  (1/alpha) sin(sqrt(nu) x) sin(sqrt(nu) y) / nu
///   nu = 0:  (1/alpha) x y
///   removed: -(2/pi) sin(j x) sin(j y)
/// Throws std::invalid_argument on a negative eigenvalue.
KernelTermList build_kernel_terms(const TargetSpectrum& spec);

double eval_L(const KernelTermList& terms, double x, double y);

}  // namespace heatline
