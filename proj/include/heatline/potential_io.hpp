#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <heatline/gl_solver.hpp>
#include <heatline/ritz.hpp>

namespace heatline {

/// Malformed CSV input; row() is 1-based and counts the header line.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t row, const std::string& what);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Floats are written with 17 significant digits so files round-trip exactly.
void set_csv_precision(std::ostream& os);

/// Two-column CSV with header `s,Q`.
void write_potential_csv(std::ostream& os, const PotentialSamples& q);
void write_potential_csv(const std::filesystem::path& path, const PotentialSamples& q);

PotentialSamples read_potential_csv(std::istream& is);
PotentialSamples read_potential_csv(const std::filesystem::path& path);

/// Rows `j,nu_target,nu_computed,rel_error` followed by a
/// `# delta=...,nu1_abs_error=...` summary line. For a zero target the
/// rel_error column carries the absolute error.
void write_report_csv(std::ostream& os, const RitzReport& report);

/// Rows `j,c_1,...,c_N`, one per eigenvector.
void write_eigenvector_csv(std::ostream& os, const RitzReport& report);

}  // namespace heatline
