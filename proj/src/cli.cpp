#include <heatline/commands.hpp>

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include <heatline/jacobi.hpp>
#include <heatline/potential_io.hpp>

namespace heatline {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gel'fand-Levitan potential construction, Ritz verification and heat-channel "
               "analysis"};
  app.set_config("--config", "", "TOML/INI file with flag values (flags override it)");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string spectrum_file;
  std::string gram_rule = "gauss-legendre";
  std::string out_dir = ".";
  int grid_m = 0;
  int grid_m1 = 0;
  int grid_m2 = 0;
  double grid_split = Grid::default_split();
  double threshold = 0.0;

  app.add_option("--spectrum-file", spectrum_file, "JSON target spectrum (default: 0, 11, 14)");
  auto* opt_m = app.add_option("--grid-m", grid_m, "uniform grid interval count");
  auto* opt_m1 = app.add_option("--grid-m1", grid_m1, "two-zone intervals on [0, split]");
  auto* opt_m2 = app.add_option("--grid-m2", grid_m2, "two-zone intervals on [split, pi]");
  auto* opt_split = app.add_option("--grid-split", grid_split, "two-zone split point (default 9pi/10)");
  app.add_option("--ritz-n", cfg.ritz_n, "Ritz basis size N (default: grid interval count)");
  app.add_option("--compare-j", cfg.compare_j, "eigenvalues compared with the target (default min(N,20))");
  app.add_option("--jacobi-tol", cfg.jacobi_tol, "Jacobi off-diagonal norm tolerance");
  app.add_option("--gram-rule", gram_rule, "gauss-legendre | trapezoid");
  app.add_option("--out-dir", out_dir, "directory for CSV output");
  auto* opt_threshold = app.add_option("--threshold", threshold, "verify fails with exit 1 above this delta");
  app.add_option("--modes-per-axis", cfg.modes_per_axis, "1-D modes kept per axis for the channel");
  app.add_option("--heat-truncation", cfg.heat_truncation, "terms in the heat series");
  app.add_option("--heat-times", cfg.heat_times, "times written to heat.csv");
  app.add_option("--plot-points", cfg.plot_points, "plot grid resolution per axis");
  opt_m->excludes(opt_m1)->excludes(opt_m2)->excludes(opt_split);

  std::string potential;
  std::string table = "uniform";

  auto* construct = app.add_subcommand("construct", "build Q on the grid and write potential.csv");
  auto* verify = app.add_subcommand("verify", "recompute the spectrum of a potential CSV");
  verify->add_option("--potential,potential", potential, "potential CSV (s,Q)")->required();
  auto* table_cmd = app.add_subcommand("table", "reproduce the convergence tables");
  table_cmd->add_option("which", table, "uniform | two_zone")->required();
  auto* channel = app.add_subcommand("channel", "heat-channel spectrum, first mode and heat series");
  channel->add_option("--potential", potential, "use this potential CSV instead of constructing");
  auto* diagnose = app.add_subcommand("diagnose-linearized",
                                      "compare straight-line moments against trapezoid moments");
  diagnose->add_option("--potential", potential, "use this potential CSV instead of constructing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (!spectrum_file.empty()) cfg.spectrum_file = spectrum_file;
    cfg.gram_rule = parse_gram_rule(gram_rule);
    cfg.out_dir = out_dir;
    if (opt_threshold->count() > 0) cfg.threshold = threshold;
    const bool two_zone = opt_m1->count() + opt_m2->count() + opt_split->count() > 0;
    if (two_zone) {
      if (opt_m1->count() == 0 || opt_m2->count() == 0) {
        throw std::invalid_argument("a two-zone grid needs both --grid-m1 and --grid-m2");
      }
      cfg.grid = GridSpec::two_zone(grid_m1, grid_m2, grid_split);
    } else if (opt_m->count() > 0) {
      cfg.grid = GridSpec::uniform(grid_m);
    }

    std::optional<std::filesystem::path> potential_path;
    if (!potential.empty()) potential_path = potential;

    if (construct->parsed()) return cmd_construct(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, *potential_path, out);
    if (table_cmd->parsed()) return cmd_table(parse_table_kind(table), cfg, out);
    if (channel->parsed()) return cmd_channel(cfg, potential_path, out);
    if (diagnose->parsed()) return cmd_diagnose_linearized(cfg, potential_path, out);
  } catch (const CsvError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace heatline
