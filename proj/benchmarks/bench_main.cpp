#include <benchmark/benchmark.h>

#include "cpulse/analysis.hpp"
#include "cpulse/families.hpp"
#include "cpulse/propagator.hpp"
#include "cpulse/solver.hpp"

using namespace cpulse;

namespace {

void bm_compose(benchmark::State& state) {
  const CompositeSequence seq = symmetric_half_pi(static_cast<int>(state.range(0)));
  double eps = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(seq, eps));
    eps = -eps;
  }
}
BENCHMARK(bm_compose)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void bm_probability_series(benchmark::State& state) {
  const CompositeSequence seq = asymmetric_half_pi(5);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(probability_series(seq, order));
}
BENCHMARK(bm_probability_series)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_precise_series(benchmark::State& state) {
  const precise::Sequence seq = precise::lift(asymmetric_half_pi(5));
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(precise::probability_series(seq, order));
}
BENCHMARK(bm_precise_series)->Arg(8)->Arg(16);

void bm_solve_restart(benchmark::State& state) {
  const SolveTemplate tmpl = variable_rotation_template(5, 0.5);
  SolveOptions opts;
  opts.restarts = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_phases(tmpl, opts));
    ++opts.seed;
  }
}
BENCHMARK(bm_solve_restart);

void bm_robustness_window(benchmark::State& state) {
  const CompositeSequence seq = asymmetric_half_pi(5);
  for (auto _ : state) benchmark::DoNotOptimize(robustness_window(seq, 1e-4));
}
BENCHMARK(bm_robustness_window);

}  // namespace

BENCHMARK_MAIN();
