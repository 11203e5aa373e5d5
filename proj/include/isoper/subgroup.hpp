#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "isoper/group_set.hpp"

namespace isoper {

// A subgroup together with its coset labeling. Coset labels follow the
// canonical order: the coset of the smallest unlabeled element receives the
// next label, so label 0 is the subgroup itself.
class Subgroup {
 public:
  Subgroup() : Subgroup(trivial(Group())) {}

  // Validates closure; throws NotASubgroup.
  static Subgroup from_set(const GroupSet& members);
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);

  const Group& group() const noexcept { return members_.group(); }
  const GroupSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return group().order() / order(); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool contains(Element a) const noexcept { return members_.contains(a); }
  bool contains(const Subgroup& o) const { return o.members_.is_subset_of(members_); }

  std::uint32_t coset_of(Element a) const { return (*coset_index_)[a]; }
  const std::vector<std::uint32_t>& coset_index() const noexcept { return *coset_index_; }
  // Smallest element of each coset, by label.
  const std::vector<Element>& coset_representatives() const noexcept { return *reps_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_;
  }

 private:
  explicit Subgroup(GroupSet members);

  GroupSet members_;
  std::shared_ptr<const std::vector<std::uint32_t>> coset_index_;
  std::shared_ptr<const std::vector<Element>> reps_;
};

// Canonical homomorphism onto a quotient, as an element-indexed table.
struct Morphism {
  Group source;
  Group target;
  std::vector<Element> table;

  Element operator()(Element a) const { return table[a]; }
  GroupSet image(const GroupSet& a) const;
  GroupSet preimage(const GroupSet& b) const;
};

// Smallest subgroup containing `a`. Throws EmptySet.
Subgroup generated_subgroup(const GroupSet& a);

// Every subgroup of g exactly once, in canonical order (order, then mask).
std::vector<Subgroup> enumerate_subgroups(const Group& g);
// Every subgroup of g contained in `ambient`, in canonical order.
std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& ambient);

// g / h with the canonical coset labeling. Throws NotASubgroup when h lives
// in a different group.
std::pair<Group, Morphism> quotient(const Group& g, const Subgroup& h);

// Cap on enumerate_subgroups results; SearchCapExceeded beyond it.
inline constexpr std::size_t kSubgroupEnumerationCap = 1u << 16;

}  // namespace isoper
