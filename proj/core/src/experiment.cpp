#include "fracnash/experiment.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracnash/csv.hpp"
#include "fracnash/errors.hpp"
#include "fracnash/norms.hpp"
#include "fracnash/parallel.hpp"

namespace fracnash {

const std::vector<std::string>& ExperimentConfig::known_keys() {
  static const std::vector<std::string> keys = {
      "preset",          "sweep.gamma",     "sweep.s",        "sweep.s_column_is_2s",
      "grid.n",          "time.m",          "time.horizon",   "cost.mu1",
      "cost.mu2",        "cg.tol",          "cg.max_iter",    "control.mode",
      "control.init",    "observation.full","run.no_control", "run.seed",
      "output.dir",      "custom.lower",    "custom.upper",   "custom.omega1_lo",
      "custom.omega1_hi","custom.omega2_lo","custom.omega2_hi","custom.target1",
      "custom.target2",  "custom.source",
  };
  return keys;
}

void ExperimentConfig::apply(const KeyValueConfig& file) {
  const auto unknown = file.unknown_keys(known_keys());
  if (!unknown.empty())
    throw InvalidArgument("config: unknown key '" + unknown.front() + "'");

  if (auto v = file.get_string("preset")) {
    preset = parse_preset(*v);
    params = default_params(preset);
    gamma_list = default_gamma_list(preset);
    s_column_list = default_s_column(preset);
  }
  if (auto v = file.get_double_list("sweep.gamma")) gamma_list = *v;
  if (auto v = file.get_double_list("sweep.s")) s_column_list = *v;
  if (auto v = file.get_bool("sweep.s_column_is_2s")) s_column_is_2s = *v;
  if (auto v = file.get_int("grid.n")) params.n = *v;
  if (auto v = file.get_int("time.m")) params.m = *v;
  if (auto v = file.get_double("time.horizon")) params.horizon = *v;
  if (auto v = file.get_double("cost.mu1")) params.mu1 = *v;
  if (auto v = file.get_double("cost.mu2")) params.mu2 = *v;
  if (auto v = file.get_double("cg.tol")) tol_sq = *v;
  if (auto v = file.get_int("cg.max_iter")) max_iter = *v;
  if (auto v = file.get_string("control.mode")) {
    if (*v == "constant")
      params.custom_control_mode = ControlMode::kTimeConstant;
    else if (*v == "time_dependent")
      params.custom_control_mode = ControlMode::kTimeDependent;
    else
      throw InvalidArgument("config: control.mode must be constant or time_dependent");
  }
  if (auto v = file.get_double("control.init")) params.initial_control = *v;
  if (auto v = file.get_bool("observation.full")) params.omega_d_full = *v;
  if (auto v = file.get_bool("run.no_control")) no_control = *v;
  if (auto v = file.get_int("run.seed")) seed = std::uint64_t(*v);
  if (auto v = file.get_string("output.dir")) output_dir = *v;
  if (auto v = file.get_double("custom.lower")) params.lower = *v;
  if (auto v = file.get_double("custom.upper")) params.upper = *v;
  if (auto v = file.get_double("custom.omega1_lo")) params.omega1_lo = *v;
  if (auto v = file.get_double("custom.omega1_hi")) params.omega1_hi = *v;
  if (auto v = file.get_double("custom.omega2_lo")) params.omega2_lo = *v;
  if (auto v = file.get_double("custom.omega2_hi")) params.omega2_hi = *v;
  if (auto v = file.get_double("custom.target1")) params.target1_value = *v;
  if (auto v = file.get_double("custom.target2")) params.target2_value = *v;
  if (auto v = file.get_double("custom.source")) params.source_value = *v;
}

double reported_error(ErrorConvention convention, const ProblemSpec& problem,
                      const SpaceTimeField& state, const Eigen::VectorXd& target) {
  const int last = state.levels() - 1;
  switch (convention) {
    case ErrorConvention::kSpacetimeSquaredObserved: {
      SpaceTimeField misfit(state.levels(), state.ndof());
      for (int n = 0; n < state.levels(); ++n)
        misfit.row(n) = state.row(n) - target.transpose();
      const double norm = l2_norm_spacetime(misfit, problem.omega_d, problem.space, problem.time);
      return norm * norm;
    }
    case ErrorConvention::kSpatialL2:
    case ErrorConvention::kFinalSliceL2: {
      const Eigen::VectorXd diff = state.row(last).transpose() - target;
      return l2_norm_space(diff, Subdomain::whole(problem.space), problem.space);
    }
    case ErrorConvention::kFinalSliceEuclidean:
      return (state.row(last).transpose() - target).norm();
  }
  return 0.0;
}

namespace {

ResultRow solve_one(const ExperimentConfig& config, double gamma, double s_column,
                    Eigen::MatrixXd* timeseries, Eigen::VectorXd* snapshot,
                    ProblemSpec* problem_out) {
  ResultRow row;
  row.gamma = gamma;
  row.s_column = s_column;

  PresetParams params = config.params;
  params.gamma = gamma;
  params.s = s_from_column(config.preset, s_column, config.s_column_is_2s);

  const ProblemSpec problem = make_problem(config.preset, params);
  if (problem_out) *problem_out = problem;
  const ForwardSystem system(problem);

  const auto start = std::chrono::steady_clock::now();
  NashSolution solution;
  if (config.no_control) {
    solution = evaluate_at_controls(system, initial_controls(problem, params));
    solution.diagnostics.converged = true;
  } else {
    CgOptions options{config.tol_sq, config.max_iter};
    solution = nash_cg(system, options, initial_controls(problem, params));
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const ErrorConvention convention = error_convention(config.preset);
  row.err_w1 = reported_error(convention, problem, solution.state, problem.target1);
  row.err_w2 = reported_error(convention, problem, solution.state, problem.target2);
  row.iterations = solution.diagnostics.iterations;
  row.final_tolerance = solution.diagnostics.final_rel_residual_sq;
  row.converged = solution.diagnostics.converged;
  row.residual_p1 = solution.diagnostics.final_rel_residual_sq_p1;
  row.residual_p2 = solution.diagnostics.final_rel_residual_sq_p2;

  if (timeseries) {
    const int levels = solution.state.levels();
    timeseries->resize(levels, 2);
    timeseries->col(0) = solution.costs.tracking_curve1;
    timeseries->col(1) = solution.costs.tracking_curve2;
  }
  if (snapshot) *snapshot = solution.state.row(solution.state.levels() - 1).transpose();
  return row;
}

std::string run_tag(const ResultRow& row) {
  return "g" + format_double(row.gamma) + "_s" + format_double(row.s_column);
}

}  // namespace

RunArtifacts run_experiment(const ExperimentConfig& config) {
  if (config.gamma_list.empty() || config.s_column_list.empty())
    throw InvalidArgument("run_experiment: sweep lists must be non-empty");

  const int rows = int(config.gamma_list.size() * config.s_column_list.size());
  RunArtifacts artifacts;
  artifacts.rows.resize(size_t(rows));
  artifacts.timeseries.resize(size_t(rows));
  artifacts.snapshots.resize(size_t(rows));
  artifacts.problems.resize(size_t(rows));

  parallel_for(rows, [&](int i) {
    const double gamma = config.gamma_list[size_t(i) / config.s_column_list.size()];
    const double s_col = config.s_column_list[size_t(i) % config.s_column_list.size()];
    artifacts.rows[size_t(i)] = solve_one(config, gamma, s_col, &artifacts.timeseries[size_t(i)],
                                          &artifacts.snapshots[size_t(i)],
                                          &artifacts.problems[size_t(i)]);
  });
  return artifacts;
}

std::string results_csv_text(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "gamma,s,err_w1,err_w2,iters,tol,seconds\n";
  for (const ResultRow& r : rows) {
    out << format_double(r.gamma) << ',' << format_double(r.s_column) << ','
        << format_double(r.err_w1) << ',' << format_double(r.err_w2) << ',' << r.iterations
        << ',' << format_double(r.final_tolerance) << ',' << format_double(r.seconds) << '\n';
  }
  return out.str();
}

std::vector<ResultRow> parse_results_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "gamma,s,err_w1,err_w2,iters,tol,seconds")
    throw InvalidArgument("results csv: bad header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw InvalidArgument("results csv: bad row");
    ResultRow r;
    r.gamma = parse_double(f[0]);
    r.s_column = parse_double(f[1]);
    r.err_w1 = parse_double(f[2]);
    r.err_w2 = parse_double(f[3]);
    r.iterations = int(parse_double(f[4]));
    r.final_tolerance = parse_double(f[5]);
    r.seconds = parse_double(f[6]);
    rows.push_back(r);
  }
  return rows;
}

void emit_outputs(const ExperimentConfig& config, const RunArtifacts& artifacts) {
  namespace fs = std::filesystem;
  fs::create_directories(config.output_dir);

  auto open = [&](const std::string& name) {
    std::ofstream out(fs::path(config.output_dir) / name);
    if (!out) throw InvalidArgument("emit_outputs: cannot write to " + config.output_dir);
    return out;
  };

  {
    auto out = open("results.csv");
    out << results_csv_text(artifacts.rows);
  }

  for (size_t i = 0; i < artifacts.rows.size(); ++i) {
    const ResultRow& row = artifacts.rows[i];
    const ProblemSpec& problem = artifacts.problems[i];

    {
      auto out = open("timeseries_" + run_tag(row) + ".csv");
      out << "t,err1_sq,err2_sq\n";
      const Eigen::MatrixXd& ts = artifacts.timeseries[i];
      for (Eigen::Index n = 0; n < ts.rows(); ++n) {
        const double t = problem.tracking == TrackingMode::kElliptic ? 0.0
                                                                     : problem.time.node(int(n));
        out << format_double(t) << ',' << format_double(ts(n, 0)) << ','
            << format_double(ts(n, 1)) << '\n';
      }
    }
    {
      auto out = open("state_" + run_tag(row) + ".csv");
      const bool two_d = problem.space.dimension() == 2;
      out << (two_d ? "x,y,w\n" : "x,w\n");
      const Eigen::VectorXd& w = artifacts.snapshots[i];
      for (Eigen::Index k = 0; k < w.size(); ++k) {
        const auto xy = problem.space.coords(k);
        out << format_double(xy[0]);
        if (two_d) out << ',' << format_double(xy[1]);
        out << ',' << format_double(w[k]) << '\n';
      }
    }
  }
}

}  // namespace fracnash
