#include "isoper/group_set.hpp"

#include "isoper/error.hpp"
#include "isoper/kernels.hpp"

namespace isoper {

GroupSet::GroupSet(Group g) : group_(std::move(g)), mask_(group_.order()) {}

GroupSet::GroupSet(Group g, BitMask mask)
    : group_(std::move(g)), mask_(std::move(mask)), count_(mask_.count()) {
  if (mask_.size() != group_.order()) {
    throw Error(ErrorCode::GroupMismatch, "mask width does not match group order");
  }
}

GroupSet GroupSet::of(const Group& g, std::span<const Element> elems) {
  GroupSet s(g);
  for (Element a : elems) {
    g.check(a);
    s.insert(a);
  }
  return s;
}

GroupSet GroupSet::full(const Group& g) {
  BitMask m(g.order());
  m.fill();
  return GroupSet(g, std::move(m));
}

GroupSet GroupSet::singleton(const Group& g, Element a) {
  g.check(a);
  GroupSet s(g);
  s.insert(a);
  return s;
}

Element GroupSet::min() const {
  if (empty()) throw Error(ErrorCode::EmptySet, "minimum of empty set");
  return static_cast<Element>(mask_.first());
}

std::vector<Element> GroupSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  mask_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

void GroupSet::insert(Element a) {
  group_.check(a);
  if (!mask_.test(a)) {
    mask_.set(a);
    ++count_;
  }
}

void GroupSet::erase(Element a) {
  group_.check(a);
  if (mask_.test(a)) {
    mask_.reset(a);
    --count_;
  }
}

GroupSet GroupSet::translate(Element a) const {
  group_.check(a);
  BitMask out(group_.order());
  kernels::translate_or(group_, mask_, a, out);
  return GroupSet(group_, std::move(out));
}

GroupSet GroupSet::negate() const {
  GroupSet out(group_);
  mask_.for_each([&](std::size_t i) { out.mask_.set(group_.neg(static_cast<Element>(i))); });
  out.count_ = count_;
  return out;
}

GroupSet GroupSet::complement() const {
  BitMask m = mask_;
  m.flip();
  return GroupSet(group_, std::move(m));
}

bool GroupSet::is_subset_of(const GroupSet& o) const {
  require_same_group(*this, o);
  return mask_.is_subset_of(o.mask_);
}

bool GroupSet::intersects(const GroupSet& o) const {
  require_same_group(*this, o);
  return mask_.intersects(o.mask_);
}

GroupSet operator|(const GroupSet& a, const GroupSet& b) {
  require_same_group(a, b);
  BitMask m = a.mask_;
  m |= b.mask_;
  return GroupSet(a.group_, std::move(m));
}

GroupSet operator&(const GroupSet& a, const GroupSet& b) {
  require_same_group(a, b);
  BitMask m = a.mask_;
  m &= b.mask_;
  return GroupSet(a.group_, std::move(m));
}

GroupSet operator-(const GroupSet& a, const GroupSet& b) {
  require_same_group(a, b);
  BitMask m = a.mask_;
  m.subtract(b.mask_);
  return GroupSet(a.group_, std::move(m));
}

bool canonical_less(const GroupSet& a, const GroupSet& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return numeric_less(a.mask(), b.mask());
}

void require_same_group(const GroupSet& a, const GroupSet& b) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorCode::GroupMismatch,
                "sets belong to different groups: " + a.group().name() + " vs " + b.group().name());
  }
}

}  // namespace isoper
