// Serial reference kernels against their OpenMP counterparts.
// ECC_SPECTRA_THREADS caps the parallel side.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "ecc/generators.hpp"
#include "ecc/kernels.hpp"

using namespace ecc;

namespace {

Graph bench_graph(std::size_t blocks) {
  GeneratorSpec spec;
  spec.seed = 77;
  spec.n_blocks = {blocks, blocks};
  spec.block_size = {2, 5};
  return random_ct_clique_tree(spec);
}

std::vector<std::uint32_t> row_max(const std::vector<std::uint32_t>& dist, std::size_t n) {
  std::vector<std::uint32_t> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i] = *std::max_element(dist.begin() + i * n, dist.begin() + (i + 1) * n);
  return e;
}

template <auto Kernel>
void bfs(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
  state.counters["n"] = static_cast<double>(g.order());
}

template <auto Kernel>
void ecc_entries(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const auto dist = kernels::reference::bfs_all_pairs(g);
  const auto e = row_max(dist, g.order());
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(dist, e));
  state.counters["n"] = static_cast<double>(g.order());
}

template <auto Kernel>
void berkowitz(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const auto dist = kernels::reference::bfs_all_pairs(g);
  const std::size_t n = g.order();
  const IntSymMatrix a(n, kernels::reference::eccentricity_entries(dist, row_max(dist, n)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a));
  state.counters["n"] = static_cast<double>(n);
}

}  // namespace

BENCHMARK(bfs<kernels::reference::bfs_all_pairs>)->Name("bfs/serial")->Arg(50)->Arg(200)->Arg(800);
BENCHMARK(bfs<kernels::bfs_all_pairs>)->Name("bfs/omp")->Arg(50)->Arg(200)->Arg(800);
BENCHMARK(ecc_entries<kernels::reference::eccentricity_entries>)->Name("ecc_entries/serial")->Arg(50)->Arg(200)->Arg(800);
BENCHMARK(ecc_entries<kernels::eccentricity_entries>)->Name("ecc_entries/omp")->Arg(50)->Arg(200)->Arg(800);
BENCHMARK(berkowitz<kernels::reference::berkowitz>)->Name("berkowitz/serial")->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(berkowitz<kernels::berkowitz>)->Name("berkowitz/omp")->Arg(10)->Arg(20)->Arg(40);

int main(int argc, char** argv) {
  kernels::apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
