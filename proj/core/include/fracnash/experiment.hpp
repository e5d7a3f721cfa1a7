#pragma once

#include <string>
#include <vector>

#include "fracnash/config_file.hpp"
#include "fracnash/nash.hpp"
#include "fracnash/presets.hpp"

namespace fracnash {

/// A fully resolved experiment: preset, sweep lists, solver knobs, output
/// location. Built from preset defaults, then a config file, then CLI
/// overrides (later layers win).
struct ExperimentConfig {
  Preset preset = Preset::kEx3;
  PresetParams params = default_params(Preset::kEx3);

  std::vector<double> gamma_list = default_gamma_list(Preset::kEx3);
  std::vector<double> s_column_list = default_s_column(Preset::kEx3);
  bool s_column_is_2s = true;

  double tol_sq = 1e-10;
  int max_iter = 500;
  bool no_control = false;

  std::string output_dir = "out";
  bool write_outputs = true;
  std::uint64_t seed = 2024;

  /// Known config-file keys (for typo rejection).
  static const std::vector<std::string>& known_keys();

  /// Apply a parsed config file on top of the current values.
  void apply(const KeyValueConfig& file);
};

/// One sweep row in the source tables' conventions: the s column carries the
/// doubled order where the corresponding table does.
struct ResultRow {
  double gamma = 0.0;
  double s_column = 0.0;
  double err_w1 = 0.0;
  double err_w2 = 0.0;
  int iterations = 0;
  double final_tolerance = 0.0;  // relative squared residual at exit
  double seconds = 0.0;
  bool converged = true;

  // per-player residuals at exit, for the stationary sweep's diagnostics
  double residual_p1 = 0.0;
  double residual_p2 = 0.0;
};

struct RunArtifacts {
  std::vector<ResultRow> rows;
  /// One per row: the per-time-level squared observed misfits (columns
  /// err1_sq, err2_sq over the time nodes).
  std::vector<Eigen::MatrixXd> timeseries;
  /// One per row: final-time state values in grid order.
  std::vector<Eigen::VectorXd> snapshots;
  std::vector<ProblemSpec> problems;
};

/// Error in the preset's reporting convention.
double reported_error(ErrorConvention convention, const ProblemSpec& problem,
                      const SpaceTimeField& state, const Eigen::VectorXd& target);

/// Run the sweep; rows appear in sweep order (gamma outer, s inner)
/// regardless of execution order. Non-converged rows are flagged, not fatal.
RunArtifacts run_experiment(const ExperimentConfig& config);

/// Write results.csv (header `gamma,s,err_w1,err_w2,iters,tol,seconds`), one
/// `timeseries_*.csv` per row (header `t,err1_sq,err2_sq`), and one
/// `state_*.csv` per row (header `x,w` or `x,y,w`), all under
/// config.output_dir. Numbers are shortest round-trip decimal text.
void emit_outputs(const ExperimentConfig& config, const RunArtifacts& artifacts);

/// The results CSV as a string (used by emit_outputs and the round-trip
/// tests).
std::string results_csv_text(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_results_csv(const std::string& text);

}  // namespace fracnash
