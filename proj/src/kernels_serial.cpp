#include <bit>
#include <limits>

#include "isoper/kernels.hpp"

namespace isoper::kernels {

void translate_or(const Group& g, const BitMask& src, Element shift, BitMask& dst) {
  if (!g.is_product()) {
    src.for_each([&](std::size_t i) { dst.set(g.add(static_cast<Element>(i), shift)); });
    return;
  }
  const std::uint32_t len = g.row_length();
  const std::uint32_t rows = g.order() / len;
  const std::uint32_t rot = shift % len;
  const Element row_shift = shift - rot;
  for (std::uint32_t r = 0; r < rows; ++r) {
    const std::size_t src_base = std::size_t{r} * len;
    const std::size_t dst_base = rows == 1 ? 0 : g.add(static_cast<Element>(src_base), row_shift);
    if (rot == 0) {
      dst.or_range(src, src_base, dst_base, len);
    } else {
      dst.or_range(src, src_base, dst_base + rot, len - rot);
      dst.or_range(src, src_base + (len - rot), dst_base, rot);
    }
  }
}

BitMask sumset_reference(const Group& g, const BitMask& a, const BitMask& b) {
  BitMask out(g.order());
  a.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) {
      out.set(g.add(static_cast<Element>(x), static_cast<Element>(y)));
    });
  });
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

StratumResult scan_stratum_reference(const LocalGraph& graph, std::size_t m, std::size_t k) {
  StratumResult res;
  const std::size_t n = graph.n;
  if (m == 0 || m > n) return res;
  // Every mask over the n vertices, in increasing order; keep those of the
  // right size that contain vertex 0.
  // The largest mask, 2^n - 1, is odd, so the odd masks stop exactly on it.
  const std::uint64_t last = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t x = 1;; x += 2) {
    if (static_cast<std::size_t>(std::popcount(x)) == m) {
      ++res.examined;
      std::uint64_t gamma = 0;
      for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
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
    }
    if (x == last) break;
  }
  return res;
}

}  // namespace isoper::kernels
