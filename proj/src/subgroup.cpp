#include "isoper/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "isoper/error.hpp"
#include "isoper/kernels.hpp"

namespace isoper {

namespace {

bool closed_under_group_law(const GroupSet& s) {
  const Group& g = s.group();
  if (!s.contains(0)) return false;
  // A finite non-empty set closed under addition is a subgroup. Checking
  // s + a = s for each a in s is enough.
  for (Element a : s.elements()) {
    BitMask shifted(g.order());
    kernels::translate_or(g, s.mask(), a, shifted);
    if (!(shifted == s.mask())) return false;
  }
  return true;
}

// Cyclic subgroups of the elements of `ambient`, one per distinct subgroup.
std::vector<GroupSet> cyclic_subgroups(const Subgroup& ambient) {
  const Group& g = ambient.group();
  std::vector<char> covered(g.order(), 0);
  std::vector<GroupSet> out;
  for (Element x : ambient.members().elements()) {
    if (covered[x]) continue;
    GroupSet c(g);
    std::vector<Element> multiples;
    Element y = 0;
    do {
      multiples.push_back(y);
      c.insert(y);
      y = g.add(y, x);
    } while (y != 0);
    const std::uint64_t ord = multiples.size();
    // j*x generates the same subgroup iff gcd(j, ord) == 1
    for (std::uint64_t j = 0; j < ord; ++j) {
      if (std::gcd(j, ord) == 1) covered[multiples[j]] = 1;
    }
    covered[x] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Subgroup::Subgroup(GroupSet members) : members_(std::move(members)) {
  const Group& g = members_.group();
  auto index = std::make_shared<std::vector<std::uint32_t>>(g.order(), UINT32_MAX);
  auto reps = std::make_shared<std::vector<Element>>();
  const auto elems = members_.elements();
  std::uint32_t next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if ((*index)[x] != UINT32_MAX) continue;
    reps->push_back(x);
    for (Element h : elems) (*index)[g.add(x, h)] = next;
    ++next;
  }
  coset_index_ = std::move(index);
  reps_ = std::move(reps);
}

Subgroup Subgroup::from_set(const GroupSet& members) {
  if (!closed_under_group_law(members)) {
    throw Error(ErrorCode::NotASubgroup, "set is not closed under the group law");
  }
  return Subgroup(members);
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(GroupSet::singleton(g, 0)); }

Subgroup Subgroup::whole(const Group& g) { return Subgroup(GroupSet::full(g)); }

GroupSet Morphism::image(const GroupSet& a) const {
  if (!(a.group() == source)) throw Error(ErrorCode::GroupMismatch, "set not in morphism source");
  GroupSet out(target);
  a.mask().for_each([&](std::size_t x) { out.insert(table[x]); });
  return out;
}

GroupSet Morphism::preimage(const GroupSet& b) const {
  if (!(b.group() == target)) throw Error(ErrorCode::GroupMismatch, "set not in morphism target");
  GroupSet out(source);
  for (Element x = 0; x < source.order(); ++x) {
    if (b.contains(table[x])) out.insert(x);
  }
  return out;
}

Subgroup generated_subgroup(const GroupSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "cannot generate a subgroup from the empty set");
  const Group& g = a.group();
  BitMask h(g.order());
  h.set(0);
  for (Element x : a.elements()) {
    if (h.test(x)) continue;
    // h := h + <x>
    BitMask cyc(g.order());
    Element y = 0;
    do {
      cyc.set(y);
      y = g.add(y, x);
    } while (y != 0);
    h = kernels::sumset(g, h, cyc);
  }
  return Subgroup::from_set(GroupSet(g, std::move(h)));
}

std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& ambient) {
  const Group& g = ambient.group();
  const auto cyclic = cyclic_subgroups(ambient);

  std::vector<GroupSet> found;
  std::unordered_set<BitMask> seen;
  for (const auto& c : cyclic) {
    if (seen.insert(c.mask()).second) found.push_back(c);
  }
  // Join closure: every subgroup is a join of cyclic ones, so joining each
  // discovered subgroup with every cyclic subgroup reaches a fixpoint.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.mask().is_subset_of(found[i].mask())) continue;
      BitMask join = kernels::sumset(g, found[i].mask(), c.mask());
      if (seen.insert(join).second) {
        found.emplace_back(g, std::move(join));
        if (found.size() > kSubgroupEnumerationCap) {
          throw Error(ErrorCode::SearchCapExceeded, "too many subgroups to enumerate");
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Subgroup::from_set(s));
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g) {
  return enumerate_subgroups_within(Subgroup::whole(g));
}

std::pair<Group, Morphism> quotient(const Group& g, const Subgroup& h) {
  if (!(h.group() == g)) throw Error(ErrorCode::NotASubgroup, "subgroup belongs to another group");
  const auto& labels = h.coset_index();
  std::vector<Element> reps = h.coset_representatives();
  Group q = make_quotient_group(g, reps, labels);
  Morphism phi{g, q, std::vector<Element>(labels.begin(), labels.end())};
  return {std::move(q), std::move(phi)};
}

}  // namespace isoper
