#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace heatline {

/// Closed, strictly increasing grid on [0, pi].
class Grid {
 public:
  /// `intervals` equal panels on [0, pi]. Requires intervals >= 2.
  static Grid uniform(int intervals);

  /// m1 equal panels on [0, split] followed by m2 equal panels on
  /// [split, pi]; the split point is stored once.
  static Grid two_zone(int m1, int m2, double split = default_split());

  /// Validates an arbitrary point set (at least 3 points, x_0 = 0,
  /// x_last = pi within 1e-12, strictly increasing).
  static Grid from_points(std::vector<double> points);

  static double default_split();

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t intervals() const { return points_.size() - 1; }
  double operator[](std::size_t i) const { return points_[i]; }

  bool operator==(const Grid&) const = default;

 private:
  explicit Grid(std::vector<double> points) : points_(std::move(points)) {}
  std::vector<double> points_;
};

}  // namespace heatline
