// Blocked parallel rank against the dense serial reference on boundary
// matrices of growing size.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "leibniz/catalog.hpp"
#include "leibniz/complexes.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/reference.hpp"

using namespace leibniz;

namespace {

SparseMatrix boundary(int which) {
  switch (which) {
    case 0: return leibniz_boundary(sl(2).algebra, 4);                        // 81 x 243
    case 1: return leibniz_boundary(catalog_entry("sl2-affine").algebra, 4);  // 125 x 625
    case 2: return leibniz_boundary(catalog_entry("so3-affine").algebra, 4);  // 216 x 1296
    default: return leibniz_boundary(catalog_entry("so3-affine").algebra, 5); // 1296 x 7776
  }
}

void BM_reference(benchmark::State& state) {
  const auto m = boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_blocked_serial(benchmark::State& state) {
  const auto m = boundary(static_cast<int>(state.range(0)));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  omp_set_num_threads(saved);
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_blocked_parallel(benchmark::State& state) {
  const auto m = boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["cols"] = static_cast<double>(m.cols());
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_blocked_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_blocked_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
