// Serial reference vs OpenMP for the hot kernels.

#include <vector>

#include <benchmark/benchmark.h>

#include "brio/delta.hpp"
#include "brio/fv.hpp"
#include "brio/kernels.hpp"
#include "brio/weak_form.hpp"

using namespace brio;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) ? Execution::parallel : Execution::serial;
}

FvField initial_field(int n) {
  FvField f;
  f.u.resize(n);
  f.q.resize(n);
  for (int i = 0; i < n; ++i) {
    const bool left = i < n / 2;
    f.u[i] = left ? 1.0 : 0.7;
    f.q[i] = left ? 5.0 : 7.0;
  }
  return f;
}

void BM_RusanovStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Execution exec = exec_of(state);
  FvField f = initial_field(n);
  std::vector<double> un(n), qn(n), fu(n + 1), fq(n + 1);
  for (auto _ : state) {
    rusanov_step(exec, f.u, f.q, 0.05, fu, fq, un, qn);
    benchmark::DoNotOptimize(un.data());
    benchmark::DoNotOptimize(qn.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
  state.SetLabel(execution_name(exec));
}

void BM_MaxWaveSpeed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Execution exec = exec_of(state);
  const FvField f = initial_field(n);
  for (auto _ : state) benchmark::DoNotOptimize(max_wave_speed(exec, f.u, f.q));
  state.SetItemsProcessed(state.iterations() * n);
  state.SetLabel(execution_name(exec));
}

void BM_FvSolve(benchmark::State& state) {
  FvGrid g;
  g.n_cells = static_cast<int>(state.range(0));
  const Execution exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(fv_solve_trans({1.0, 5.0}, {0.7, 7.0}, g, exec));
  state.SetLabel(execution_name(exec));
}

void BM_WeakBattery(benchmark::State& state) {
  const Execution exec = exec_of(state);
  const DeltaSolution s = solve_brio({{0.0, 2.5}, {1.0, -2.5}});
  const auto phis = standard_battery(s);
  WeakOptions o;
  o.nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weak_residuals(s, phis, brio_flux_pair(), o, exec));
  state.SetLabel(execution_name(exec));
}

}  // namespace

BENCHMARK(BM_RusanovStep)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {0, 1}});
BENCHMARK(BM_MaxWaveSpeed)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {0, 1}});
BENCHMARK(BM_FvSolve)->ArgsProduct({{1024, 4096}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakBattery)->ArgsProduct({{16, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
