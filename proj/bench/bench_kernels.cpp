// Serial reference kernels against the word-level / OpenMP variants.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "isoper/group.hpp"
#include "isoper/kernels.hpp"

namespace {

using isoper::BitMask;
using isoper::kernels::LocalGraph;

BitMask random_mask(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BitMask m(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) m.set(i);
  return m;
}

template <bool Reference>
void BM_Sumset(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  const auto g = isoper::make_group({order});
  const BitMask a = random_mask(order, 0.05, 1);
  const BitMask b = random_mask(order, 0.05, 2);
  for (auto _ : state) {
    BitMask r = Reference ? isoper::kernels::sumset_reference(g, a, b) : isoper::kernels::sumset(g, a, b);
    benchmark::DoNotOptimize(r);
  }
}

// Cayley graph of Z_n with connection set {0, 1, 3, 7}.
LocalGraph cyclic_graph(std::size_t n) {
  LocalGraph lg;
  lg.n = n;
  lg.nbr.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t s : {0, 1, 3, 7}) lg.nbr[v] |= std::uint64_t{1} << ((v + s) % n);
  return lg;
}

template <bool Reference>
void BM_ScanStratum(benchmark::State& state) {
  const auto graph = cyclic_graph(static_cast<std::size_t>(state.range(0)));
  const auto m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    auto r = Reference ? isoper::kernels::scan_stratum_reference(graph, m, 2)
                       : isoper::kernels::scan_stratum(graph, m, 2);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Sumset<true>)->Name("sumset/reference")->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK(BM_Sumset<false>)->Name("sumset/wordlevel")->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK(BM_ScanStratum<true>)->Name("scan_stratum/reference")->Args({20, 5})->Args({24, 6});
BENCHMARK(BM_ScanStratum<false>)->Name("scan_stratum/parallel")->Args({20, 5})->Args({24, 6});

BENCHMARK_MAIN();
