#include <heatline/potential_io.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace heatline {

namespace {

double parse_double(std::string_view text, std::size_t row) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw CsvError(row, "empty field");
  const std::string buf(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE) {
    throw CsvError(row, "not a number: '" + buf + "'");
  }
  return v;
}

}  // namespace

CsvError::CsvError(std::size_t row, const std::string& what)
    : std::runtime_error("CSV row " + std::to_string(row) + ": " + what), row_(row) {}

void set_csv_precision(std::ostream& os) {
  os << std::setprecision(17);
  os.unsetf(std::ios::floatfield);
}

void write_potential_csv(std::ostream& os, const PotentialSamples& q) {
  set_csv_precision(os);
  os << "s,Q\n";
  for (std::size_t i = 0; i < q.grid.size(); ++i) os << q.grid[i] << ',' << q.values[i] << '\n';
}

void write_potential_csv(const std::filesystem::path& path, const PotentialSamples& q) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_potential_csv(out, q);
}

PotentialSamples read_potential_csv(std::istream& is) {
  std::string line;
  std::size_t row = 1;
  if (!std::getline(is, line)) throw CsvError(row, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "s,Q") throw CsvError(row, "expected header 's,Q', got '" + line + "'");

  std::vector<double> s;
  std::vector<double> q;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw CsvError(row, "expected exactly two columns");
    }
    s.push_back(parse_double(std::string_view(line).substr(0, comma), row));
    q.push_back(parse_double(std::string_view(line).substr(comma + 1), row));
    if (!std::isfinite(q.back())) throw CsvError(row, "potential value is not finite");
  }
  try {
    return PotentialSamples{Grid::from_points(std::move(s)), std::move(q)};
  } catch (const std::invalid_argument& e) {
    throw CsvError(row, e.what());
  }
}

PotentialSamples read_potential_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open potential file " + path.string());
  return read_potential_csv(in);
}

void write_report_csv(std::ostream& os, const RitzReport& report) {
  set_csv_precision(os);
  os << "j,nu_target,nu_computed,rel_error\n";
  for (std::size_t i = 0; i < report.per_eigenvalue_errors.size(); ++i) {
    const int j = static_cast<int>(i + 1);
    os << j << ',' << report.target.eigenvalue(j) << ',' << report.eigenvalues[i] << ','
       << report.per_eigenvalue_errors[i] << '\n';
  }
  os << "# delta=" << report.delta << ",nu1_abs_error=" << report.ground_abs_error << '\n';
}

void write_eigenvector_csv(std::ostream& os, const RitzReport& report) {
  set_csv_precision(os);
  const std::size_t n = report.basis_size;
  os << 'j';
  for (std::size_t c = 1; c <= n; ++c) os << ",c_" << c;
  os << '\n';
  for (std::size_t k = 0; k < n; ++k) {
    os << (k + 1);
    for (std::size_t r = 0; r < n; ++r) os << ',' << report.eigenvectors(r, k);
    os << '\n';
  }
}

}  // namespace heatline
