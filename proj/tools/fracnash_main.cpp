// Command-line driver: runs one of the built-in experiment setups (or a
// config-driven custom one) over a (gamma, s) sweep, writes the results CSV
// and per-run plot data, and optionally cross-checks the iterative solver
// against the dense direct solve on a shrunken instance.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "fracnash/csv.hpp"
#include "fracnash/experiment.hpp"
#include "fracnash/oracle.hpp"

namespace {

int run_oracle_check(const fracnash::ExperimentConfig& config, const std::string& dump_path) {
  using namespace fracnash;

  PresetParams params = shrunk_params(config.preset);
  params.gamma = config.gamma_list.front();
  params.s = s_from_column(config.preset, config.s_column_list.front(), config.s_column_is_2s);

  const ProblemSpec problem = make_problem(config.preset, params);
  const ForwardSystem system(problem);
  std::printf("oracle check: preset %s shrunk to %lld control DOFs\n",
              preset_name(config.preset).c_str(), (long long)problem.control_dofs());

  const DenseReducedSystem dense = assemble_dense_A(system);
  const SpdCertificate cert = certify_spd(system, dense);
  std::printf("  symmetry defect  %s\n", format_double(cert.symmetry_defect).c_str());
  std::printf("  min eigenvalue   %s (floor %s)\n", format_double(cert.min_eigenvalue).c_str(),
              format_double(cert.coercivity_floor).c_str());
  if (!dump_path.empty()) {
    write_dense_system(dense, dump_path);
    std::printf("  dense system written to %s\n", dump_path.c_str());
  }

  const ControlPair direct = oracle_nash_solve(system, dense);
  const NashSolution iterative = nash_cg(system, {1e-24, 2000}, problem.zero_controls());

  const ControlPair diff = iterative.controls - direct;
  const double denom = std::sqrt(h_norm_sq(problem, direct));
  const double rel = denom > 0.0 ? std::sqrt(h_norm_sq(problem, diff)) / denom
                                 : std::sqrt(h_norm_sq(problem, diff));
  std::printf("  solver vs direct %s relative disagreement\n", format_double(rel).c_str());

  const bool ok = cert.passed && rel <= 1e-8;
  std::printf("oracle check: %s\n", ok ? "ok" : "FAILED");
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria of two-player control problems constrained by "
               "space-time fractional diffusion"};

  std::string config_path;
  std::string preset = "ex3";
  std::string gamma_arg, s_arg, out_dir;
  int n = -1, m = -1, max_iter = -1;
  double horizon = -1.0, mu1 = -1.0, mu2 = -1.0, tol = -1.0;
  bool no_control = false, oracle_check = false;
  bool s_col_literal = false;
  std::string dump_path;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--preset", preset, "ex1 | ex2 | ex3 | ex4 | custom");
  app.add_option("--gamma", gamma_arg, "time order(s), comma separated");
  app.add_option("--s", s_arg, "spatial order column value(s), comma separated");
  app.add_option("--n", n, "interior grid points per axis");
  app.add_option("--m", m, "time steps");
  app.add_option("--t", horizon, "final time");
  app.add_option("--mu1", mu1, "player 1 regularization weight");
  app.add_option("--mu2", mu2, "player 2 regularization weight");
  app.add_option("--tol", tol, "stopping threshold on the relative squared residual");
  app.add_option("--max-iter", max_iter, "iteration cap");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--no-control", no_control,
               "skip optimization; simulate with the preset's initial controls");
  app.add_flag("--s-literal", s_col_literal,
               "read the s sweep values as the order itself, not its double");
  app.add_flag("--oracle-check", oracle_check,
               "shrink the instance, run the dense direct solve, report disagreement");
  app.add_option("--dump-system", dump_path,
                 "with --oracle-check: write the dense operator and right-hand side here");

  CLI11_PARSE(app, argc, argv);

  try {
    fracnash::ExperimentConfig config;
    config.preset = fracnash::parse_preset(preset);
    config.params = fracnash::default_params(config.preset);
    config.gamma_list = fracnash::default_gamma_list(config.preset);
    config.s_column_list = fracnash::default_s_column(config.preset);

    if (!config_path.empty())
      config.apply(fracnash::KeyValueConfig::parse_file(config_path));

    if (!gamma_arg.empty()) config.gamma_list = fracnash::parse_double_list(gamma_arg);
    if (!s_arg.empty()) config.s_column_list = fracnash::parse_double_list(s_arg);
    if (s_col_literal) config.s_column_is_2s = false;
    if (n > 0) config.params.n = n;
    if (m > 0) config.params.m = m;
    if (horizon > 0.0) config.params.horizon = horizon;
    if (mu1 > 0.0) config.params.mu1 = mu1;
    if (mu2 > 0.0) config.params.mu2 = mu2;
    if (tol > 0.0) config.tol_sq = tol;
    if (max_iter > 0) config.max_iter = max_iter;
    if (!out_dir.empty()) config.output_dir = out_dir;
    config.no_control = no_control;

    if (oracle_check) return run_oracle_check(config, dump_path);

    const fracnash::RunArtifacts artifacts = fracnash::run_experiment(config);
    fracnash::emit_outputs(config, artifacts);

    bool all_converged = true;
    for (const auto& row : artifacts.rows) {
      std::printf("gamma=%s s=%s err_w1=%s err_w2=%s iters=%d%s\n",
                  fracnash::format_double(row.gamma).c_str(),
                  fracnash::format_double(row.s_column).c_str(),
                  fracnash::format_double(row.err_w1).c_str(),
                  fracnash::format_double(row.err_w2).c_str(), row.iterations,
                  row.converged ? "" : "  [did not converge]");
      all_converged = all_converged && row.converged;
    }
    std::printf("results written to %s\n", config.output_dir.c_str());
    return all_converged ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
