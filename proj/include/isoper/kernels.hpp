#pragma once

// Hot loops shared by setops and isoperimetry. Each kernel has a plain serial
// reference that follows the definition directly; the production variant is
// word-level and OpenMP-parallel. Tests hold the two against each other and
// bench/ compares their throughput.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isoper/bitmask.hpp"
#include "isoper/group.hpp"

namespace isoper::kernels {

// dst |= shift + src. Word-level row rotation for product groups, per-element
// otherwise. `dst` must not alias `src`.
void translate_or(const Group& g, const BitMask& src, Element shift, BitMask& dst);

// {x + y : x in a, y in b}, one group addition per pair.
BitMask sumset_reference(const Group& g, const BitMask& a, const BitMask& b);

// Same result as sumset_reference: shifted-OR of the larger operand over the
// elements of the smaller one, cost O(min(|a|,|b|) * N / 64). Parallel over
// the smaller operand when the work is large enough.
BitMask sumset(const Group& g, const BitMask& a, const BitMask& b);

// Cayley graph restricted to at most 64 vertices, indexed locally. nbr[v] is
// the local mask of v + S.
struct LocalGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> nbr;
};

// Minimum boundary over the size-m vertex sets that contain local vertex 0 and
// satisfy |X + S| <= n - k, with every set attaining it. Sets are reported in
// increasing numeric mask order.
struct StratumResult {
  bool any = false;
  std::size_t min_boundary = 0;
  std::vector<std::uint64_t> achievers;
  std::uint64_t examined = 0;
};

StratumResult scan_stratum_reference(const LocalGraph& graph, std::size_t m, std::size_t k);
StratumResult scan_stratum(const LocalGraph& graph, std::size_t m, std::size_t k);

// C(n, r) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept;

// Number of size-m candidates containing vertex 0 in an n-vertex graph.
inline std::uint64_t stratum_size(std::size_t n, std::size_t m) noexcept {
  return m == 0 || m > n ? 0 : binomial(n - 1, m - 1);
}

}  // namespace isoper::kernels
