#include <benchmark/benchmark.h>

#include "dycktile/grove.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/oracle.hpp"
#include "dycktile/tiling.hpp"

using namespace dycktile;

namespace {

void BM_BuildM(benchmark::State& state, bool parallel) {
  PathIndex paths(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? kernels::build_m_parallel(paths) : kernels::build_m_serial(paths));
}

void BM_Invert(benchmark::State& state, bool parallel) {
  TriMatrix m = build_m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? kernels::invert_parallel(m) : kernels::invert_serial(m));
}

void BM_MinvFromTilings(benchmark::State& state, bool parallel) {
  PathIndex paths(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    clear_tiling_caches();
    benchmark::DoNotOptimize(parallel ? kernels::minv_from_tilings_parallel(paths)
                                      : kernels::minv_from_tilings_serial(paths));
  }
}

void BM_DsAll(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  XMatrix x(n);
  for (int i = 1; i <= 2 * n; i += 2)
    for (int j = 2; j <= 2 * n; j += 2) x.set(i, j, Rational(i + 2 * j, j + 1));
  std::vector<NodeSet> sets;
  for (const DyckPath& h : enumerate_dyck_paths(n)) sets.push_back(dyck_to_confining(h).members());
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? kernels::d_s_all_parallel(x, sets) : kernels::d_s_all_serial(x, sets));
}

void BM_CimAll(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  DenseMatrix<Rational> l(static_cast<std::size_t>(2 * n), std::vector<Rational>(static_cast<std::size_t>(2 * n)));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(1, 1 + (i * 7 + j * 3) % 11);
  std::vector<NodeSet> stars;
  for (const DyckPath& h : enumerate_dyck_paths(n)) stars.push_back(s_to_s_star(n, dyck_to_confining(h).members()));
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? kernels::cim_all_parallel(l, stars) : kernels::cim_all_serial(l, stars));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BuildM, serial, false)->DenseRange(5, 8);
BENCHMARK_CAPTURE(BM_BuildM, parallel, true)->DenseRange(5, 8);
BENCHMARK_CAPTURE(BM_Invert, serial, false)->DenseRange(5, 7);
BENCHMARK_CAPTURE(BM_Invert, parallel, true)->DenseRange(5, 7);
BENCHMARK_CAPTURE(BM_MinvFromTilings, serial, false)->DenseRange(4, 6);
BENCHMARK_CAPTURE(BM_MinvFromTilings, parallel, true)->DenseRange(4, 6);
BENCHMARK_CAPTURE(BM_DsAll, serial, false)->DenseRange(4, 6);
BENCHMARK_CAPTURE(BM_DsAll, parallel, true)->DenseRange(4, 6);
BENCHMARK_CAPTURE(BM_CimAll, serial, false)->DenseRange(4, 6);
BENCHMARK_CAPTURE(BM_CimAll, parallel, true)->DenseRange(4, 6);

BENCHMARK_MAIN();
