#pragma once

#include <heatline/gl_solver.hpp>
#include <heatline/ritz.hpp>
#include <heatline/spectral_data.hpp>

namespace fixture {

/// Default-spectrum potential on the uniform M = 300 grid, built once.
inline const heatline::PotentialSamples& default_potential_300() {
  static const auto q = heatline::construct_potential(heatline::default_target_spectrum(),
                                                      heatline::Grid::uniform(300));
  return q;
}

inline const heatline::RitzReport& default_report_300() {
  static const auto r =
      heatline::verify_potential(default_potential_300(), heatline::default_target_spectrum());
  return r;
}

}  // namespace fixture
