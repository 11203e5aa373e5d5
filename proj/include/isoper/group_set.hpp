#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "isoper/bitmask.hpp"
#include "isoper/group.hpp"

namespace isoper {

// A subset of a finite group held as an order()-bit membership mask with a
// cached cardinality.
class GroupSet {
 public:
  GroupSet() = default;  // empty subset of the trivial group
  explicit GroupSet(Group g);
  GroupSet(Group g, BitMask mask);

  static GroupSet of(const Group& g, std::span<const Element> elems);
  static GroupSet of(const Group& g, std::initializer_list<Element> elems) {
    return of(g, std::span<const Element>(elems.begin(), elems.size()));
  }
  static GroupSet full(const Group& g);
  static GroupSet singleton(const Group& g, Element a);

  const Group& group() const noexcept { return group_; }
  const BitMask& mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Element a) const noexcept { return a < mask_.size() && mask_.test(a); }
  // Smallest element index; throws EmptySet.
  Element min() const;
  std::vector<Element> elements() const;

  void insert(Element a);
  void erase(Element a);

  // a + this
  GroupSet translate(Element a) const;
  GroupSet negate() const;
  GroupSet complement() const;

  bool is_subset_of(const GroupSet& o) const;
  bool intersects(const GroupSet& o) const;

  friend GroupSet operator|(const GroupSet& a, const GroupSet& b);
  friend GroupSet operator&(const GroupSet& a, const GroupSet& b);
  friend GroupSet operator-(const GroupSet& a, const GroupSet& b);

  friend bool operator==(const GroupSet& a, const GroupSet& b) noexcept {
    return a.group_ == b.group_ && a.mask_ == b.mask_;
  }

 private:
  Group group_;
  BitMask mask_{1};
  std::size_t count_ = 0;
};

// Canonical order on subsets: cardinality first, then the numeric value of
// the membership mask (bit i = element i).
bool canonical_less(const GroupSet& a, const GroupSet& b) noexcept;

// Throws GroupMismatch if the sets live in different groups.
void require_same_group(const GroupSet& a, const GroupSet& b);

}  // namespace isoper
