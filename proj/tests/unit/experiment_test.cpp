#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fracnash/csv.hpp"
#include "fracnash/experiment.hpp"

using namespace fracnash;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// results.csv with the wall-time column blanked, for determinism checks.
std::string strip_seconds(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto comma = line.rfind(',');
    out << line.substr(0, comma) << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("number text round trips") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = u(rng) * std::pow(10.0, int(rng() % 20) - 10);
    CHECK(parse_double(format_double(x)) == x);
  }
  CHECK(format_double(0.25) == "0.25");
  CHECK_THROWS_AS(parse_double("12,5"), InvalidArgument);
}

TEST_CASE("preset constants audit") {
  // every numeric constant below is a literal from the experiment setups
  SUBCASE("ex1") {
    const PresetParams d = default_params(Preset::kEx1);
    const ProblemSpec p = make_problem(Preset::kEx1, d);
    CHECK(d.horizon == 1.5);
    CHECK(d.gamma == 0.99);
    CHECK(d.s == 1.0);
    CHECK(d.mu1 == 1e-4);
    CHECK(d.mu2 == 1e-4);
    CHECK(p.space.dimension() == 2);
    CHECK(p.space.lower(0) == 0.0);
    CHECK(p.space.upper(0) == 1.0);
    CHECK(p.control_mode == ControlMode::kTimeDependent);
    CHECK(p.target1[0] == 1.0);
    CHECK(p.target2[0] == -1.0);
    CHECK(p.omega_d.box()->lower[0] == 0.25);
    CHECK(p.omega_d.box()->upper[0] == 0.75);
    CHECK(p.omega1.box()->upper[0] == 0.25);
    CHECK(p.omega2.box()->lower[0] == 0.75);
    CHECK(p.omega2.box()->upper[1] == 0.25);
    CHECK(p.source.level(0)[0] == 1.0);
    CHECK(p.initial_state.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("ex2") {
    const ProblemSpec p = make_problem(Preset::kEx2, default_params(Preset::kEx2));
    CHECK(p.tracking == TrackingMode::kElliptic);
    CHECK(default_params(Preset::kEx2).mu1 == 1e-4);
    const auto cols = default_s_column(Preset::kEx2);
    CHECK(cols.size() == 20);
    CHECK(cols.front() == 1.95);
    CHECK(cols.back() == 1.0);
    CHECK(s_from_column(Preset::kEx2, 1.5, true) == 0.75);
  }

  SUBCASE("ex3") {
    const PresetParams d = default_params(Preset::kEx3);
    const ProblemSpec p = make_problem(Preset::kEx3, d);
    CHECK(d.n == 40);
    CHECK(d.m == 80);
    CHECK(p.time.tau() == 0.5 / 80);
    CHECK(d.horizon == 0.5);
    CHECK(d.mu1 == 10.0);
    CHECK(d.initial_control == 1.0);
    CHECK(p.space.lower(0) == -2.0);
    CHECK(p.space.upper(0) == 2.0);
    CHECK(p.omega1.size() == 10);
    CHECK(p.omega2.size() == 10);
    // indicator targets supported on the quarter intervals
    CHECK(p.target1.sum() == 10.0);
    CHECK(p.target2.sum() == 10.0);
    CHECK(p.target1[0] == 1.0);
    CHECK(p.target1[20] == 0.0);
    CHECK(default_gamma_list(Preset::kEx3) == std::vector<double>{0.60, 0.70, 0.80, 0.90});
    CHECK(default_s_column(Preset::kEx3) == std::vector<double>{0.50, 1.00, 1.50});
    CHECK(s_from_column(Preset::kEx3, 1.50, true) == 0.75);
    CHECK(s_from_column(Preset::kEx3, 0.50, false) == 0.50);
    CHECK_THROWS_AS(s_from_column(Preset::kEx3, 1.50, false), InvalidArgument);
  }

  SUBCASE("ex4") {
    const ProblemSpec p = make_problem(Preset::kEx4, default_params(Preset::kEx4));
    CHECK(p.target1.maxCoeff() == 1.0);
    CHECK(p.target2.minCoeff() == -1.0);
    CHECK(p.target1.sum() == 10.0);
    CHECK(p.target2.sum() == -10.0);
    CHECK(default_s_column(Preset::kEx4) == std::vector<double>{0.25, 0.50, 0.75});
    CHECK(error_convention(Preset::kEx4) == ErrorConvention::kFinalSliceEuclidean);
  }

  CHECK_THROWS_AS(parse_preset("ex9"), InvalidArgument);
}

TEST_CASE("config parsing") {
  const KeyValueConfig cfg = KeyValueConfig::parse_text(
      "# comment\n"
      "preset = ex4\n"
      "sweep.gamma = 0.6, 0.9\n"
      "cg.tol = 1e-12\n"
      "run.no_control = true\n"
      "grid.n   =   14\n");
  CHECK(*cfg.get_string("preset") == "ex4");
  CHECK(*cfg.get_double_list("sweep.gamma") == std::vector<double>{0.6, 0.9});
  CHECK(*cfg.get_double("cg.tol") == 1e-12);
  CHECK(*cfg.get_bool("run.no_control"));
  CHECK(*cfg.get_int("grid.n") == 14);
  CHECK_FALSE(cfg.get_string("absent").has_value());

  CHECK_THROWS_AS(KeyValueConfig::parse_text("no equals sign\n"), InvalidArgument);

  ExperimentConfig exp;
  exp.apply(cfg);
  CHECK(exp.preset == Preset::kEx4);
  CHECK(exp.params.n == 14);
  CHECK(exp.no_control);
  CHECK(exp.gamma_list == std::vector<double>{0.6, 0.9});

  CHECK_THROWS_WITH_AS(exp.apply(KeyValueConfig::parse_text("grid.nn = 3\n")),
                       doctest::Contains("unknown key"), InvalidArgument);
}

TEST_CASE("results csv shape and round trip") {
  SUBCASE("empty runs still carry the header") {
    CHECK(results_csv_text({}) == "gamma,s,err_w1,err_w2,iters,tol,seconds\n");
  }

  SUBCASE("one row round trips bit-identically") {
    ResultRow r;
    r.gamma = 0.7;
    r.s_column = 1.5;
    r.err_w1 = 0.6676123456789;
    r.err_w2 = 1.0 / 3.0;
    r.iterations = 17;
    r.final_tolerance = 3.4e-11;
    r.seconds = 0.125;
    const std::string text = results_csv_text({r});
    const auto parsed = parse_results_csv(text);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].gamma == r.gamma);
    CHECK(parsed[0].s_column == r.s_column);
    CHECK(parsed[0].err_w1 == r.err_w1);
    CHECK(parsed[0].err_w2 == r.err_w2);
    CHECK(parsed[0].iterations == r.iterations);
    CHECK(parsed[0].final_tolerance == r.final_tolerance);
    CHECK(parsed[0].seconds == r.seconds);
    CHECK(results_csv_text(parsed) == text);
  }
}

TEST_CASE("experiment sweep on the shrunken interval setup") {
  ExperimentConfig config;
  config.preset = Preset::kEx3;
  config.params = shrunk_params(Preset::kEx3);
  config.gamma_list = {0.6, 0.9};
  config.s_column_list = {0.5, 1.0};
  config.tol_sq = 1e-16;
  config.output_dir = (fs::temp_directory_path() / "fracnash_exp_test").string();

  const RunArtifacts artifacts = run_experiment(config);
  REQUIRE(artifacts.rows.size() == 4);

  SUBCASE("rows are ordered gamma-major and converged") {
    CHECK(artifacts.rows[0].gamma == 0.6);
    CHECK(artifacts.rows[0].s_column == 0.5);
    CHECK(artifacts.rows[1].s_column == 1.0);
    CHECK(artifacts.rows[2].gamma == 0.9);
    for (const auto& row : artifacts.rows) {
      CHECK(row.converged);
      CHECK(row.err_w1 > 0.0);
      CHECK(row.err_w1 == doctest::Approx(row.err_w2).epsilon(1e-10));  // mirrored setup
    }
  }

  SUBCASE("timeseries has one row per time node") {
    const ProblemSpec p = make_problem(Preset::kEx3, config.params);
    for (const auto& ts : artifacts.timeseries) CHECK(ts.rows() == p.time.levels());
  }

  SUBCASE("outputs are deterministic and parse back") {
    emit_outputs(config, artifacts);
    const std::string first = slurp(fs::path(config.output_dir) / "results.csv");

    const RunArtifacts again = run_experiment(config);
    emit_outputs(config, again);
    const std::string second = slurp(fs::path(config.output_dir) / "results.csv");
    CHECK(strip_seconds(first) == strip_seconds(second));

    const auto rows = parse_results_csv(first);
    CHECK(rows.size() == 4);

    const std::string ts = slurp(fs::path(config.output_dir) / "timeseries_g0.6_s0.5.csv");
    CHECK(ts.rfind("t,err1_sq,err2_sq\n", 0) == 0);
    CHECK(std::count(ts.begin(), ts.end(), '\n') == 1 + 7);  // header + M+1 nodes

    const std::string snap = slurp(fs::path(config.output_dir) / "state_g0.6_s0.5.csv");
    CHECK(snap.rfind("x,w\n", 0) == 0);

    fs::remove_all(config.output_dir);
  }

  SUBCASE("sweep order does not change row values") {
    ExperimentConfig shuffled = config;
    shuffled.gamma_list = {0.9, 0.6};
    shuffled.s_column_list = {1.0, 0.5};
    const RunArtifacts other = run_experiment(shuffled);
    // compare matching (gamma, s) cells
    for (const auto& row : artifacts.rows) {
      const auto match = std::find_if(other.rows.begin(), other.rows.end(), [&](const ResultRow& r) {
        return r.gamma == row.gamma && r.s_column == row.s_column;
      });
      REQUIRE(match != other.rows.end());
      CHECK(match->err_w1 == row.err_w1);
      CHECK(match->err_w2 == row.err_w2);
      CHECK(match->iterations == row.iterations);
    }
  }
}

TEST_CASE("stationary sweep emits single-node timeseries") {
  ExperimentConfig config;
  config.preset = Preset::kEx2;
  config.params = shrunk_params(Preset::kEx2);
  config.gamma_list = {1.0};
  config.s_column_list = {1.5};
  config.tol_sq = 1e-13;
  config.write_outputs = false;

  const RunArtifacts artifacts = run_experiment(config);
  REQUIRE(artifacts.rows.size() == 1);
  CHECK(artifacts.rows[0].converged);
  CHECK(artifacts.timeseries[0].rows() == 1);
  // both players' exit residuals agree to tight absolute tolerance
  CHECK(std::abs(artifacts.rows[0].residual_p1 - artifacts.rows[0].residual_p2) <= 1e-12);
}

TEST_CASE("2s reporting conventions") {
  CHECK(reports_doubled_s(Preset::kEx2, true));
  CHECK(reports_doubled_s(Preset::kEx3, true));
  CHECK_FALSE(reports_doubled_s(Preset::kEx3, false));
  CHECK_FALSE(reports_doubled_s(Preset::kEx1, true));
  CHECK_FALSE(reports_doubled_s(Preset::kEx4, true));
}
