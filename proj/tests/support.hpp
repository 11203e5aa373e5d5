#pragma once

#include <vector>

#include "isoper/group_set.hpp"
#include "oracle.hpp"

// Both sides index elements the same way, so masks translate bit for bit.
inline isoper::GroupSet to_set(const isoper::Group& g, oracle::Mask m) {
  isoper::GroupSet s(g);
  for (auto x : oracle::members(m)) s.insert(x);
  return s;
}

inline oracle::Mask to_mask(const isoper::GroupSet& s) {
  oracle::Mask m = 0;
  for (auto x : s.elements()) m |= oracle::Mask{1} << x;
  return m;
}

struct GroupPair {
  isoper::Group lib;
  oracle::Grp ref;
};

inline GroupPair group_pair(std::vector<std::uint32_t> factors) {
  return {isoper::make_group(std::span<const std::uint32_t>(factors)), oracle::Grp(factors)};
}

// Small groups used by the exhaustive comparisons.
inline std::vector<std::vector<std::uint32_t>> small_groups(std::uint32_t max_cyclic) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t n = 1; n <= max_cyclic; ++n) out.push_back({n});
  out.push_back({2, 2});
  out.push_back({2, 4});
  out.push_back({4, 2});
  out.push_back({2, 2, 2});
  out.push_back({3, 3});
  return out;
}
