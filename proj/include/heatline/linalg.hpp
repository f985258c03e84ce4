#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace heatline {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<const double> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves A x = b by Gaussian elimination with partial pivoting. Throws
/// SingularMatrixError when the largest available pivot falls below
/// `pivot_floor` in absolute value.
std::vector<double> solve_partial_pivot(Matrix a, std::vector<double> b,
                                        double pivot_floor = 1e-12);

std::vector<double> multiply(const Matrix& a, std::span<const double> x);

}  // namespace heatline
