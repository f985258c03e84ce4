#include <heatline/commands.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <heatline/potential_io.hpp>

namespace heatline {

namespace {

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  set_csv_precision(out);
  return out;
}

PotentialSamples load_or_construct(const RunConfig& config,
                                   const std::optional<std::filesystem::path>& potential) {
  if (potential) return read_potential_csv(*potential);
  return construct_potential(config.spectrum(), config.grid.build(), config.gram_rule);
}

struct ReferenceRow {
  GridSpec grid;
  double delta;
};

std::vector<ReferenceRow> reference_rows(TableKind kind) {
  if (kind == TableKind::uniform) {
    return {{GridSpec::uniform(100), 0.5712},
            {GridSpec::uniform(150), 0.0501},
            {GridSpec::uniform(200), 0.0165},
            {GridSpec::uniform(250), 0.0067},
            {GridSpec::uniform(300), 0.0032}};
  }
  return {{GridSpec::two_zone(50, 50), 0.0468},
          {GridSpec::two_zone(50, 75), 0.0094},
          {GridSpec::two_zone(50, 100), 0.0023}};
}

}  // namespace

GridSpec GridSpec::uniform(int m) {
  GridSpec g;
  g.kind = Kind::uniform;
  g.m = m;
  return g;
}

GridSpec GridSpec::two_zone(int m1, int m2, double split) {
  GridSpec g;
  g.kind = Kind::two_zone;
  g.m1 = m1;
  g.m2 = m2;
  g.split = split;
  return g;
}

Grid GridSpec::build() const {
  return kind == Kind::uniform ? Grid::uniform(m) : Grid::two_zone(m1, m2, split);
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  if (kind == Kind::uniform) {
    os << "uniform M=" << m;
  } else {
    os << "two-zone M1=" << m1 << " M2=" << m2 << " split=" << split;
  }
  return os.str();
}

TargetSpectrum RunConfig::spectrum() const {
  return spectrum_file ? load_target_spectrum(*spectrum_file) : default_target_spectrum();
}

RitzOptions RunConfig::ritz_options() const {
  RitzOptions o;
  o.basis_size = ritz_n;
  o.compare_count = compare_j;
  o.jacobi_tol = jacobi_tol;
  return o;
}

void RunConfig::validate(const Grid& grid) const {
  const auto options = ritz_options();
  const std::size_t n = resolve_basis_size(options, grid);
  const std::size_t j = resolve_compare_count(options, n);
  if (j < 2) throw std::invalid_argument("compare count J must be >= 2");
  if (n < j) throw std::invalid_argument("Ritz size N must be >= compare count J");
  if (!(jacobi_tol > 0.0)) throw std::invalid_argument("Jacobi tolerance must be positive");
}

PipelineResult run_pipeline(const RunConfig& config) {
  const auto grid = config.grid.build();
  config.validate(grid);
  const auto spec = config.spectrum();
  auto potential = construct_potential(spec, grid, config.gram_rule);
  auto report = verify_potential(potential, spec, config.ritz_options());
  return {std::move(potential), std::move(report)};
}

int cmd_construct(const RunConfig& config, std::ostream& log) {
  const auto grid = config.grid.build();
  const auto q = construct_potential(config.spectrum(), grid, config.gram_rule);
  auto out = open_output(config.out_dir, "potential.csv");
  write_potential_csv(out, q);

  const auto [lo, hi] = std::minmax_element(q.values.begin(), q.values.end());
  log << "grid: " << config.grid.describe() << " (" << grid.size() << " points)\n"
      << "gram rule: " << to_string(config.gram_rule) << '\n'
      << "Q min: " << *lo << " at s=" << grid[static_cast<std::size_t>(lo - q.values.begin())]
      << '\n'
      << "Q max: " << *hi << " at s=" << grid[static_cast<std::size_t>(hi - q.values.begin())]
      << '\n'
      << "wrote " << (config.out_dir / "potential.csv").string() << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const std::filesystem::path& potential, std::ostream& log) {
  const auto q = read_potential_csv(potential);
  config.validate(q.grid);
  const auto report = verify_potential(q, config.spectrum(), config.ritz_options());

  auto out = open_output(config.out_dir, "report.csv");
  write_report_csv(out, report);
  auto vec = open_output(config.out_dir, "eigenvectors.csv");
  write_eigenvector_csv(vec, report);

  const auto old = log.precision(6);
  log << "basis size N: " << report.basis_size << ", Jacobi sweeps: " << report.sweeps << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(5, report.eigenvalues.size()); ++i) {
    log << "nu_" << (i + 1) << " = " << report.eigenvalues[i] << '\n';
  }
  log << "|nu_1| error: " << report.ground_abs_error << '\n';
  log.precision(17);
  log << "delta: " << report.delta << '\n';
  log.precision(old);

  if (config.threshold && report.delta > *config.threshold) {
    log << "delta exceeds threshold " << *config.threshold << '\n';
    return kExitThresholdExceeded;
  }
  return kExitOk;
}

TableKind parse_table_kind(const std::string& name) {
  if (name == "uniform") return TableKind::uniform;
  if (name == "two_zone" || name == "two-zone") return TableKind::two_zone;
  throw std::invalid_argument("unknown table: " + name + " (expected uniform or two_zone)");
}

std::vector<TableRow> reproduce_table(TableKind kind, const RunConfig& base) {
  const auto rows = reference_rows(kind);
  std::vector<std::future<TableRow>> jobs;
  jobs.reserve(rows.size());
  for (const auto& row : rows) {
    jobs.push_back(std::async(std::launch::async, [row, base] {
      RunConfig cfg = base;
      cfg.grid = row.grid;
      const auto result = run_pipeline(cfg);
      return TableRow{row.grid, result.report.basis_size, result.report.delta, row.delta};
    }));
  }
  std::vector<TableRow> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

int cmd_table(TableKind kind, const RunConfig& config, std::ostream& log) {
  const auto rows = reproduce_table(kind, config);
  const std::string name = kind == TableKind::uniform ? "table_uniform.csv" : "table_two_zone.csv";
  auto out = open_output(config.out_dir, name);
  if (kind == TableKind::uniform) {
    out << "M,N,delta,paper_delta\n";
    log << "     M     N   delta(%) reference(%)\n";
  } else {
    out << "M1,M2,N,delta,paper_delta\n";
    log << "    M1    M2     N   delta(%) reference(%)\n";
  }
  const auto flags = log.flags();
  const auto old = log.precision();
  log << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    if (kind == TableKind::uniform) {
      out << r.grid.m << ',';
      log << std::setw(6) << r.grid.m;
    } else {
      out << r.grid.m1 << ',' << r.grid.m2 << ',';
      log << std::setw(6) << r.grid.m1 << std::setw(6) << r.grid.m2;
    }
    out << r.basis_size << ',' << 100.0 * r.delta << ',' << 100.0 * r.paper_delta << '\n';
    log << std::setw(6) << r.basis_size << std::setw(11) << 100.0 * r.delta << std::setw(13)
        << 100.0 * r.paper_delta << '\n';
  }
  log.flags(flags);
  log.precision(old);
  log << "wrote " << (config.out_dir / name).string() << '\n';
  return kExitOk;
}

SeparableInitialData default_initial_data() {
  return {[](double s) { return s * (kPi - s); }, [](double rho) { return kPi - rho; }};
}

ChannelSummary run_channel(const RunConfig& config,
                           const std::optional<std::filesystem::path>& potential,
                           std::ostream& log) {
  const auto q = load_or_construct(config, potential);
  config.validate(q.grid);
  const auto target = config.spectrum();
  const auto channel = assemble_channel(q);

  const auto options = config.ritz_options();
  const auto axial_report = verify_potential(channel.axial(), target, options);
  const std::size_t per_axis = std::min(config.modes_per_axis, axial_report.basis_size);
  const std::size_t combined = per_axis * per_axis;
  const auto modes = build_mode_set(channel, axial_report, options, per_axis, combined);

  ChannelSummary summary;
  summary.lambda1 = modes.combined().at(0).lambda;
  summary.lambda2 = modes.combined().size() > 1 ? modes.combined()[1].lambda : summary.lambda1;
  summary.ground_abs_error = axial_report.ground_abs_error;
  summary.concentration = concentration_metric(modes);

  {
    auto out = open_output(config.out_dir, "lambda.csv");
    out << "n,m,l,lambda_n\n";
    for (std::size_t n = 0; n < modes.combined().size(); ++n) {
      const auto& c = modes.combined()[n];
      out << (n + 1) << ',' << c.radial << ',' << c.axial << ',' << c.lambda << '\n';
    }
  }

  const std::size_t p = std::max<std::size_t>(2, config.plot_points);
  std::vector<double> s_axis(p + 1);
  std::vector<double> rho_axis(p);
  for (std::size_t i = 0; i <= p; ++i) s_axis[i] = kPi * static_cast<double>(i) / static_cast<double>(p);
  for (std::size_t i = 0; i < p; ++i) rho_axis[i] = kPi * static_cast<double>(i + 1) / static_cast<double>(p);

  {
    auto out = open_output(config.out_dir, "mode1.csv");
    out << "s,rho,phi_1\n";
    for (double s : s_axis) {
      for (double rho : rho_axis) out << s << ',' << rho << ',' << first_mode(modes, s, rho) << '\n';
    }
  }

  const std::size_t truncation = std::min(config.heat_truncation, modes.combined().size());
  const HeatSeries series(modes, default_initial_data(), truncation);
  {
    auto out = open_output(config.out_dir, "heat.csv");
    out << "s,rho,t,u\n";
    for (double t : config.heat_times) {
      for (double s : s_axis) {
        for (double rho : rho_axis) out << s << ',' << rho << ',' << t << ',' << series(s, rho, t) << '\n';
      }
    }
  }

  log << "lambda_1: " << summary.lambda1 << '\n'
      << "lambda_2: " << summary.lambda2 << '\n'
      << "concentration (rho <= pi/2): " << summary.concentration << '\n'
      << "wrote lambda.csv, mode1.csv, heat.csv to " << config.out_dir.string() << '\n';
  return summary;
}

int cmd_channel(const RunConfig& config, const std::optional<std::filesystem::path>& potential,
                std::ostream& log) {
  run_channel(config, potential, log);
  return kExitOk;
}

int cmd_diagnose_linearized(const RunConfig& config,
                            const std::optional<std::filesystem::path>& potential,
                            std::ostream& log) {
  const auto q = load_or_construct(config, potential);
  const std::size_t n = resolve_basis_size(config.ritz_options(), q.grid);
  const auto diag = linearized_qtilde_diagnostic(q, n);

  auto out = open_output(config.out_dir, "linearized_E.csv");
  out << "n,m,E\n";
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out << (r + 1) << ',' << (c + 1) << ',' << diag.relative_error(r, c) << '\n';
  }

  log << "x_max: " << diag.x_max << " (index " << diag.argmax << ")\n"
      << "x_min: " << diag.x_min << " (index " << diag.argmin << ")\n"
      << "basis size N: " << n << '\n'
      << "min(E): " << diag.min_error << '\n'
      << "max(E): " << diag.max_error << '\n';
  if (diag.skipped_entries > 0) log << "skipped " << diag.skipped_entries << " zero entries of P1\n";
  return kExitOk;
}

}  // namespace heatline
