#include <omp.h>

#include <algorithm>
#include <bit>

#include "isoper/kernels.hpp"

namespace isoper::kernels {

namespace {

constexpr std::size_t kParallelSumsetWork = std::size_t{1} << 14;
constexpr std::uint64_t kParallelStratum = 4096;

// Combination of rank `rank` (colex order) of `r` bits chosen from positions
// [0, n). Colex order coincides with increasing numeric order.
std::uint64_t unrank_colex(std::uint64_t rank, std::size_t n, std::size_t r) {
  std::uint64_t mask = 0;
  std::size_t hi = n;
  for (std::size_t i = r; i >= 1; --i) {
    std::size_t c = i - 1;
    // largest c < hi with C(c, i) <= rank
    std::size_t lo_c = i - 1, hi_c = hi - 1;
    while (lo_c < hi_c) {
      const std::size_t mid = (lo_c + hi_c + 1) / 2;
      if (binomial(mid, i) <= rank) lo_c = mid;
      else hi_c = mid - 1;
    }
    c = lo_c;
    mask |= std::uint64_t{1} << c;
    rank -= binomial(c, i);
    hi = c;
  }
  return mask;
}

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

void scan_range(const LocalGraph& graph, std::size_t m, std::size_t k, std::uint64_t first_rank,
                std::uint64_t count, StratumResult& res) {
  const std::size_t n = graph.n;
  // Choose m - 1 of the vertices 1..n-1; vertex 0 is always present.
  const std::size_t r = m - 1;
  std::uint64_t combo = r == 0 ? 0 : unrank_colex(first_rank, n - 1, r);
  for (std::uint64_t step = 0; step < count; ++step) {
    const std::uint64_t x = (combo << 1) | 1u;
    std::uint64_t gamma = graph.nbr[0];
    for (std::uint64_t rest = combo << 1; rest != 0; rest &= rest - 1) {
      gamma |= graph.nbr[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    const auto image = static_cast<std::size_t>(std::popcount(gamma));
    if (image + k <= n) {
      const std::size_t boundary = image - m;
      if (!res.any || boundary < res.min_boundary) {
        res.any = true;
        res.min_boundary = boundary;
        res.achievers.clear();
      }
      if (boundary == res.min_boundary) res.achievers.push_back(x);
    }
    if (r != 0 && step + 1 < count) combo = next_combination(combo);
  }
  res.examined += count;
}

}  // namespace

BitMask sumset(const Group& g, const BitMask& a, const BitMask& b) {
  BitMask out(g.order());
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca == 0 || cb == 0) return out;
  const BitMask& small = ca <= cb ? a : b;
  const BitMask& large = ca <= cb ? b : a;
  const std::size_t small_count = std::min(ca, cb);

  if (small_count * out.word_count() < kParallelSumsetWork || omp_in_parallel()) {
    small.for_each([&](std::size_t x) { translate_or(g, large, static_cast<Element>(x), out); });
    return out;
  }

  std::vector<Element> shifts;
  shifts.reserve(small_count);
  small.for_each([&](std::size_t x) { shifts.push_back(static_cast<Element>(x)); });

#pragma omp parallel
  {
    BitMask local(g.order());
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(shifts.size()); ++i) {
      translate_or(g, large, shifts[static_cast<std::size_t>(i)], local);
    }
#pragma omp critical(isoper_sumset_merge)
    out |= local;
  }
  return out;
}

StratumResult scan_stratum(const LocalGraph& graph, std::size_t m, std::size_t k) {
  StratumResult res;
  const std::size_t n = graph.n;
  if (m == 0 || m > n) return res;
  const std::uint64_t total = stratum_size(n, m);
  if (total < kParallelStratum || omp_in_parallel()) {
    scan_range(graph, m, k, 0, total, res);
    return res;
  }

  const auto chunks = static_cast<std::size_t>(
      std::min<std::uint64_t>(total / 1024 + 1, static_cast<std::uint64_t>(omp_get_max_threads()) * 8));
  std::vector<StratumResult> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const auto ci = static_cast<std::uint64_t>(c);
    const std::uint64_t begin = total * ci / chunks;
    const std::uint64_t end = total * (ci + 1) / chunks;
    scan_range(graph, m, k, begin, end - begin, parts[static_cast<std::size_t>(c)]);
  }

  // Merge in chunk order so the achiever list is identical to the serial scan.
  for (auto& part : parts) {
    res.examined += part.examined;
    if (!part.any) continue;
    if (!res.any || part.min_boundary < res.min_boundary) {
      res.any = true;
      res.min_boundary = part.min_boundary;
      res.achievers = std::move(part.achievers);
    } else if (part.min_boundary == res.min_boundary) {
      res.achievers.insert(res.achievers.end(), part.achievers.begin(), part.achievers.end());
    }
  }
  return res;
}

}  // namespace isoper::kernels
