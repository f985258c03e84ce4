#include <heatline/grid.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <heatline/spectral_data.hpp>

namespace heatline {

double Grid::default_split() { return 0.9 * kPi; }

Grid Grid::uniform(int intervals) {
  if (intervals < 2) throw std::invalid_argument("uniform grid needs at least 2 intervals");
  std::vector<double> pts(static_cast<std::size_t>(intervals) + 1);
  const double h = kPi / intervals;
  for (int i = 0; i < intervals; ++i) pts[static_cast<std::size_t>(i)] = i * h;
  pts.back() = kPi;
  return Grid(std::move(pts));
}

Grid Grid::two_zone(int m1, int m2, double split) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("two-zone grid needs m1, m2 >= 1");
  if (!(split > 0.0 && split < kPi)) {
    throw std::invalid_argument("two-zone split must lie strictly inside (0, pi)");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(m1 + m2) + 1);
  const double h1 = split / m1;
  for (int i = 0; i < m1; ++i) pts.push_back(i * h1);
  const double h2 = (kPi - split) / m2;
  for (int i = 0; i < m2; ++i) pts.push_back(split + i * h2);
  pts.push_back(kPi);
  return Grid(std::move(pts));
}

Grid Grid::from_points(std::vector<double> points) {
  if (points.size() < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (points.front() != 0.0) throw std::invalid_argument("grid must start at 0");
  if (std::fabs(points.back() - kPi) > 1e-12) throw std::invalid_argument("grid must end at pi");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) {
      throw std::invalid_argument("grid points must be strictly increasing (point " +
                                  std::to_string(i) + ")");
    }
  }
  return Grid(std::move(points));
}

}  // namespace heatline
