#pragma once

#include <optional>
#include <vector>

#include "isoper/group_set.hpp"
#include "isoper/subgroup.hpp"

namespace isoper {

inline constexpr unsigned kExponentCap = 16;

// a + b. Either operand may be empty. Throws GroupMismatch.
GroupSet minkowski_sum(const GroupSet& a, const GroupSet& b);

// rS - tS. Throws EmptySet, DegenerateExponents (r = t = 0), ExponentCap.
GroupSet signed_sumset(const GroupSet& s, unsigned r, unsigned t);
inline GroupSet multiple_sumset(const GroupSet& s, unsigned k) { return signed_sumset(s, k, 0); }

// {x : x + a = a}. The empty set and the whole group have period G.
Subgroup period(const GroupSet& a);
inline bool is_aperiodic(const GroupSet& a) { return period(a).is_trivial(); }
// a + h == a
bool is_periodic_under(const GroupSet& a, const Subgroup& h);

struct ArithmeticProgression {
  Element start = 0;
  Element difference = 0;

  friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

// a = {x, x+d, ..., x+(|a|-1)d} with distinct terms. The smallest valid d (by
// index) wins, then the smallest start. Singletons report (x, 0).
// Throws EmptySet.
std::optional<ArithmeticProgression> detect_arithmetic_progression(const GroupSet& a);
inline bool is_arithmetic_progression(const GroupSet& a) {
  return detect_arithmetic_progression(a).has_value();
}

struct HDecomposition {
  Subgroup subgroup;
  // Non-empty intersections with cosets, sorted by (cardinality, smallest element).
  std::vector<GroupSet> components;
  std::size_t smaller_index = 0;

  const GroupSet& smaller() const { return components[smaller_index]; }
};

// Throws EmptySet, NotASubgroup (subgroup of another group).
HDecomposition h_decompose(const GroupSet& a, const Subgroup& h);

// The image of `a` in g/h is an arithmetic progression.
bool is_modular_progression(const GroupSet& a, const Subgroup& h);

}  // namespace isoper
