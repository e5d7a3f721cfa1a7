#include <benchmark/benchmark.h>

#include "fracnash/nash.hpp"
#include "fracnash/oracle.hpp"
#include "fracnash/presets.hpp"

using namespace fracnash;

namespace {

static void BM_FcdWeights(benchmark::State& state) {
  for (auto _ : state) {
    auto c = fcd_weights(0.5, int(state.range(0)));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FcdWeights)->Range(64, 4096);

static void BM_ForwardSolve1D(benchmark::State& state) {
  PresetParams params = default_params(Preset::kEx3);
  params.n = int(state.range(0));
  const ProblemSpec p = make_problem(Preset::kEx3, params);
  const ForwardSystem sys(p);
  const ControlPair u = initial_controls(p, params);
  for (auto _ : state) {
    auto w = sys.solve_state(u);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_ForwardSolve1D)->Arg(40)->Arg(80);

static void BM_AdjointSolve1D(benchmark::State& state) {
  const PresetParams params = default_params(Preset::kEx3);
  const ProblemSpec p = make_problem(Preset::kEx3, params);
  const ForwardSystem sys(p);
  const SpaceTimeField w = sys.solve_state(initial_controls(p, params));
  for (auto _ : state) {
    auto pj = sys.solve_adjoint(w);
    benchmark::DoNotOptimize(pj);
  }
}
BENCHMARK(BM_AdjointSolve1D);

static void BM_SpectralApply2D(benchmark::State& state) {
  const int n = int(state.range(0));
  const SpaceGrid g = SpaceGrid::rectangle(0.0, 1.0, n, 0.0, 1.0, n);
  const SpatialOperator op = assemble_frac_laplacian_2d(0.75, g);
  const Eigen::VectorXd v = Eigen::VectorXd::Random(g.dof_count());
  for (auto _ : state) {
    auto out = op.apply(v);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralApply2D)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_ForwardSolve2D(benchmark::State& state) {
  PresetParams params = default_params(Preset::kEx1);
  params.n = 17;
  params.m = 32;
  const ProblemSpec p = make_problem(Preset::kEx1, params);
  const ForwardSystem sys(p);
  const ControlPair u = p.zero_controls();
  for (auto _ : state) {
    auto w = sys.solve_state(u);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_ForwardSolve2D);

static void BM_NashSolveEx3(benchmark::State& state) {
  const PresetParams params = default_params(Preset::kEx3);
  const ProblemSpec p = make_problem(Preset::kEx3, params);
  const ForwardSystem sys(p);
  for (auto _ : state) {
    auto s = nash_cg(sys, {1e-10, 500}, initial_controls(p, params));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_NashSolveEx3);

static void BM_DenseAssembly(benchmark::State& state) {
  const PresetParams params = shrunk_params(Preset::kEx1);
  const ProblemSpec p = make_problem(Preset::kEx1, params);
  const ForwardSystem sys(p);
  for (auto _ : state) {
    auto d = assemble_dense_A(sys);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DenseAssembly);

}  // namespace

BENCHMARK_MAIN();
