#pragma once

#include <cstddef>
#include <string_view>

#include "isoper/group.hpp"
#include "isoper/group_set.hpp"

namespace isoper {

// "Z12", "z4xZ2". Errors are ParseError with the offending position in the
// message, or the make_group errors.
Group parse_group(std::string_view text);

// "0,1,6" (element indices, whitespace allowed around commas) or a "0x..."
// bitmask. Throws ParseError, IndexOutOfRange, EmptySet.
GroupSet parse_set(const Group& g, std::string_view text);

struct KRange {
  std::size_t first = 1;
  std::size_t last = 1;
};
// "3" or "2..4".
KRange parse_k_range(std::string_view text);

}  // namespace isoper
