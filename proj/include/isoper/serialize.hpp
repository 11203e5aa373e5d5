#pragma once

#include <string>
#include <string_view>

#include "isoper/group_set.hpp"
#include "isoper/subgroup.hpp"
#include "isoper/verdict.hpp"

namespace isoper {

// Sorted element-index array.
Json to_json(const GroupSet& s);
Json to_json(const Subgroup& h);
Json to_json(const Verdict& v);

// "0x" followed by the mask as a big-endian hexadecimal number (bit i =
// element i), without leading zeros; "0x0" for the empty set.
std::string to_hex(const GroupSet& s);
// Throws ParseError / IndexOutOfRange.
GroupSet from_hex(const Group& g, std::string_view text);

}  // namespace isoper
