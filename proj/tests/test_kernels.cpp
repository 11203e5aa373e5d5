#include <omp.h>

#include <random>

#include "doctest.h"
#include "isoper/kernels.hpp"
#include "support.hpp"

using namespace isoper;

namespace {

BitMask random_mask(std::size_t n, double density, std::mt19937_64& rng) {
  BitMask m(n);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < n; ++i)
    if (keep(rng)) m.set(i);
  return m;
}

kernels::LocalGraph random_graph(std::size_t n, std::size_t degree, std::mt19937_64& rng) {
  // Cayley graph of Z_n with a random connection set containing 0.
  std::uint64_t s = 1;
  while (static_cast<std::size_t>(std::popcount(s)) < degree) s |= std::uint64_t{1} << (rng() % n);
  kernels::LocalGraph g{n, std::vector<std::uint64_t>(n)};
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t v = 0; v < n; ++v) {
    g.nbr[v] = v == 0 ? s : (((s << v) | (s >> (n - v))) & full);
  }
  return g;
}

}  // namespace

TEST_CASE("word-level sumset equals the pairwise reference") {
  std::mt19937_64 rng(17);
  for (const auto& f : std::vector<std::vector<std::uint32_t>>{
           {1}, {2}, {63}, {64}, {65}, {130}, {5, 7}, {64, 3}, {3, 64}, {2, 2, 2, 2, 2, 2, 2}, {12, 10}}) {
    const Group g = make_group(std::span<const std::uint32_t>(f));
    for (double da : {0.02, 0.3, 0.9}) {
      for (double db : {0.05, 0.5}) {
        const BitMask a = random_mask(g.order(), da, rng);
        const BitMask b = random_mask(g.order(), db, rng);
        CHECK(kernels::sumset(g, a, b) == kernels::sumset_reference(g, a, b));
        CHECK(kernels::sumset(g, b, a) == kernels::sumset_reference(g, a, b));
      }
    }
  }
}

TEST_CASE("parallel sumset path on a large group") {
  // Large enough for the OpenMP branch; also run under several thread counts.
  std::mt19937_64 rng(5);
  const Group g = make_group({1 << 12, 4});
  const BitMask a = random_mask(g.order(), 0.2, rng);
  const BitMask b = random_mask(g.order(), 0.01, rng);
  const BitMask expected = kernels::sumset_reference(g, a, b);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(kernels::sumset(g, a, b) == expected);
  }
  omp_set_num_threads(1);
}

TEST_CASE("translate_or on quotient and product groups") {
  std::mt19937_64 rng(9);
  const Group g = make_group({6, 10});
  const BitMask src = random_mask(g.order(), 0.4, rng);
  for (Element t = 0; t < g.order(); ++t) {
    BitMask dst(g.order());
    kernels::translate_or(g, src, t, dst);
    BitMask expected(g.order());
    src.for_each([&](std::size_t x) { expected.set(g.add(static_cast<Element>(x), t)); });
    CHECK(dst == expected);
  }
}

TEST_CASE("stratum scan equals the reference") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {5u, 9u, 16u, 20u}) {
    for (std::size_t degree : {2u, 4u}) {
      const auto graph = random_graph(n, degree, rng);
      for (std::size_t k = 1; k <= 2; ++k) {
        for (std::size_t m = 1; m <= n / 2; ++m) {
          const auto ref = kernels::scan_stratum_reference(graph, m, k);
          for (int threads : {1, 3}) {
            omp_set_num_threads(threads);
            const auto got = kernels::scan_stratum(graph, m, k);
            CHECK(got.any == ref.any);
            CHECK(got.min_boundary == ref.min_boundary);
            CHECK(got.achievers == ref.achievers);
            CHECK(got.examined == kernels::stratum_size(n, m));
          }
        }
      }
    }
  }
  omp_set_num_threads(1);
}

TEST_CASE("binomials") {
  CHECK(kernels::binomial(10, 3) == 120);
  CHECK(kernels::binomial(5, 7) == 0);
  CHECK(kernels::binomial(64, 32) == 1832624140942590534ull);
  CHECK(kernels::binomial(200, 100) == UINT64_MAX);
  CHECK(kernels::stratum_size(12, 3) == 55);
  CHECK(kernels::stratum_size(12, 0) == 0);
}
