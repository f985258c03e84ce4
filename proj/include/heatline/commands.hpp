#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <heatline/channel.hpp>
#include <heatline/gl_solver.hpp>
#include <heatline/grid.hpp>
#include <heatline/ritz.hpp>
#include <heatline/spectral_data.hpp>

namespace heatline {

enum ExitCode : int {
  kExitOk = 0,
  kExitThresholdExceeded = 1,
  kExitInputError = 2,
};

struct GridSpec {
  enum class Kind { uniform, two_zone };

  Kind kind = Kind::uniform;
  int m = 300;
  int m1 = 50;
  int m2 = 75;
  double split = Grid::default_split();

  static GridSpec uniform(int m);
  static GridSpec two_zone(int m1, int m2, double split = Grid::default_split());

  Grid build() const;
  std::string describe() const;
};

struct RunConfig {
  std::optional<std::filesystem::path> spectrum_file;  // default spectrum when empty
  GridSpec grid;
  std::size_t ritz_n = 0;     // 0: number of grid intervals
  std::size_t compare_j = 0;  // 0: min(N, 20)
  double jacobi_tol = 1e-10;
  GramRule gram_rule = GramRule::gauss_legendre;
  std::filesystem::path out_dir = ".";
  std::optional<double> threshold;  // verify fails (exit 1) when delta exceeds it

  // channel
  std::size_t modes_per_axis = 20;
  std::size_t heat_truncation = 50;
  std::vector<double> heat_times = {0.0, 0.5, 1.0, 2.0};
  std::size_t plot_points = 40;

  TargetSpectrum spectrum() const;
  RitzOptions ritz_options() const;
  /// Throws std::invalid_argument when N < J or J < 2 after defaults are
  /// resolved against `grid`.
  void validate(const Grid& grid) const;
};

struct PipelineResult {
  PotentialSamples potential;
  RitzReport report;
};

/// construct + verify in one process.
PipelineResult run_pipeline(const RunConfig& config);

int cmd_construct(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, const std::filesystem::path& potential, std::ostream& log);

enum class TableKind { uniform, two_zone };

TableKind parse_table_kind(const std::string& name);

struct TableRow {
  GridSpec grid;
  std::size_t basis_size = 0;
  double delta = 0.0;        // fraction
  double paper_delta = 0.0;  // fraction
};

/// Rows M = 100..300 (uniform) or (50,50), (50,75), (50,100) (two-zone),
/// evaluated concurrently and returned in table order.
std::vector<TableRow> reproduce_table(TableKind kind, const RunConfig& base);
int cmd_table(TableKind kind, const RunConfig& config, std::ostream& log);

struct ChannelSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double ground_abs_error = 0.0;  // verifier's |nu_1^(M) - nu_1|
  double concentration = 0.0;
};

/// Default initial temperature for the heat output: s (pi - s) * (pi - rho).
SeparableInitialData default_initial_data();

ChannelSummary run_channel(const RunConfig& config, const std::optional<std::filesystem::path>& potential,
                           std::ostream& log);
int cmd_channel(const RunConfig& config, const std::optional<std::filesystem::path>& potential,
                std::ostream& log);

int cmd_diagnose_linearized(const RunConfig& config,
                            const std::optional<std::filesystem::path>& potential,
                            std::ostream& log);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heatline
