#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <heatline/spectral_data.hpp>

#include "../oracles.hpp"

using namespace heatline;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("default spectrum merges perturbed and free values") {
  const auto spec = default_target_spectrum();
  CHECK(spec.eigenvalue(1) == 0.0);
  CHECK(spec.eigenvalue(2) == 11.0);
  CHECK(spec.eigenvalue(3) == 14.0);
  CHECK(spec.eigenvalue(4) == 16.0);
  CHECK(spec.eigenvalue(7) == 49.0);
  CHECK(spec.normalizer(1) == doctest::Approx(kPi * kPi * kPi / 3).epsilon(1e-15));
  CHECK(spec.normalizer(5) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(spec.eigenvalue(0), std::invalid_argument);
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("default kernel has six terms with the expected weights") {
  const auto terms = build_kernel_terms(default_target_spectrum());
  REQUIRE(terms.rank() == 6);
  CHECK(terms[0].basis.frequency == 0.0);
  CHECK(terms[0].weight == doctest::Approx(3.0 / (kPi * kPi * kPi)).epsilon(1e-15));
  CHECK(terms[1].basis.frequency == doctest::Approx(std::sqrt(11.0)).epsilon(1e-15));
  CHECK(terms[1].weight == doctest::Approx(2.0 / (kPi * 11.0)).epsilon(1e-15));
  CHECK(terms[2].weight == doctest::Approx(2.0 / (kPi * 14.0)).epsilon(1e-15));
  for (std::size_t j = 3; j < 6; ++j) {
    CHECK(terms[j].basis.frequency == static_cast<double>(j - 2));
    CHECK(terms[j].weight == doctest::Approx(-2.0 / kPi).epsilon(1e-15));
  }
  for (std::size_t j = 0; j < 6; ++j) {
    for (double x : {0.3, 1.7, 2.9}) {
      CHECK(terms[j].a(x) == doctest::Approx(oracle::default_a(j, x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("free spectrum gives an empty kernel") {
  TargetSpectrum free;
  const auto terms = build_kernel_terms(free);
  CHECK(terms.empty());
  CHECK(eval_L(terms, 1.0, 2.0) == 0.0);
}

TEST_CASE("kernel values match frozen high-precision references") {
  const auto terms = build_kernel_terms(default_target_spectrum());
  // 20-digit references for the default kernel
  CHECK(eval_L(terms, kPi / 2, kPi / 2) == doctest::Approx(-0.98272013021178798333).epsilon(1e-14));
  CHECK(eval_L(terms, kPi / 2, kPi / 3) == doctest::Approx(-0.36303499702579855227).epsilon(1e-14));
  CHECK(eval_L(terms, 1.0, 2.5) == doctest::Approx(0.38117500931157495387).epsilon(1e-14));
}

TEST_CASE("kernel vanishes on the axes and is symmetric") {
  const auto terms = build_kernel_terms(default_target_spectrum());
  for (int i = 0; i <= 20; ++i) {
    const double x = kPi * i / 20.0;
    CHECK(eval_L(terms, x, 0.0) == 0.0);
    CHECK(eval_L(terms, 0.0, x) == 0.0);
    for (int k = 0; k <= 20; ++k) {
      const double y = kPi * k / 20.0;
      CHECK(std::fabs(eval_L(terms, x, y) - eval_L(terms, y, x)) <= 1e-12);
      CHECK(eval_L(terms, x, y) ==
            doctest::Approx(static_cast<double>(oracle::default_kernel(x, y))).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("term derivatives agree with central differences") {
  const auto terms = build_kernel_terms(default_target_spectrum());
  const double h = 1e-6;
  for (const auto& t : terms.terms()) {
    for (double x : {0.1, 1.3, 3.0}) {
      const double fd_a = (t.a(x + h) - t.a(x - h)) / (2 * h);
      const double fd_b = (t.b(x + h) - t.b(x - h)) / (2 * h);
      CHECK(t.a_prime(x) == doctest::Approx(fd_a).epsilon(1e-7).scale(1.0));
      CHECK(t.b_prime(x) == doctest::Approx(fd_b).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("invalid spectra are rejected") {
  TargetSpectrum neg;
  neg.perturbed = {{2, -1.0, kFreeNormalizer}};
  CHECK_THROWS_AS(build_kernel_terms(neg), std::invalid_argument);

  TargetSpectrum unordered;
  unordered.perturbed = {{3, 14.0, kFreeNormalizer}, {2, 11.0, kFreeNormalizer}};
  CHECK_THROWS_AS(unordered.validate(), std::invalid_argument);

  TargetSpectrum bad_alpha;
  bad_alpha.perturbed = {{2, 11.0, 0.0}};
  CHECK_THROWS_AS(bad_alpha.validate(), std::invalid_argument);

  TargetSpectrum crossing;  // nu_2 = 10 above nu_3 = 9
  crossing.perturbed = {{2, 10.0, kFreeNormalizer}};
  CHECK_THROWS_AS(crossing.validate(), std::invalid_argument);

  TargetSpectrum wide;
  wide.interval_length = 2 * kPi;
  CHECK_THROWS_AS(wide.validate(), std::invalid_argument);
}

TEST_CASE("spectrum files load with alpha defaults") {
  const auto path = write_temp("heatline_spec_ok.json",
                               R"({"eigenvalues":[{"index":1,"nu":0},{"index":2,"nu":11},)"
                               R"({"index":3,"nu":14,"alpha":2.0}]})");
  const auto spec = load_target_spectrum(path);
  REQUIRE(spec.perturbed.size() == 3);
  CHECK(spec.perturbed[0].alpha == doctest::Approx(kZeroModeNormalizer).epsilon(1e-15));
  CHECK(spec.perturbed[1].alpha == doctest::Approx(kFreeNormalizer).epsilon(1e-15));
  CHECK(spec.perturbed[2].alpha == 2.0);

  const auto broken = write_temp("heatline_spec_bad.json", "{\"eigenvalues\": [");
  CHECK_THROWS_AS(load_target_spectrum(broken), std::invalid_argument);
  const auto missing = write_temp("heatline_spec_missing.json", R"({"values":[]})");
  CHECK_THROWS_AS(load_target_spectrum(missing), std::invalid_argument);
  CHECK_THROWS(load_target_spectrum("/nonexistent/spec.json"));
}
