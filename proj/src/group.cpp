#include "isoper/group.hpp"

#include <numeric>

#include "isoper/error.hpp"

namespace isoper {

namespace detail {

struct GroupImpl {
  std::uint32_t order = 1;
  std::vector<std::uint32_t> factors;
  std::vector<std::uint32_t> strides;

  // quotient representation
  std::shared_ptr<const Group> parent;
  std::vector<Element> reps;
  std::vector<std::uint32_t> label_of;

  bool is_product() const noexcept { return parent == nullptr; }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::GroupImpl> trivial_impl() {
  static const auto impl = [] {
    auto g = std::make_shared<detail::GroupImpl>();
    g->factors = {1};
    g->strides = {1};
    return std::shared_ptr<const detail::GroupImpl>(std::move(g));
  }();
  return impl;
}

}  // namespace

Group::Group() : impl_(trivial_impl()) {}

std::uint32_t Group::order() const noexcept { return impl_->order; }

std::span<const std::uint32_t> Group::factors() const noexcept { return impl_->factors; }

bool Group::is_product() const noexcept { return impl_->is_product(); }

bool Group::is_cyclic_product() const noexcept {
  return impl_->is_product() && impl_->factors.size() == 1;
}

std::uint32_t Group::row_length() const noexcept {
  return impl_->is_product() ? impl_->factors.front() : impl_->order;
}

const Group* Group::parent() const noexcept { return impl_->parent.get(); }

std::span<const Element> Group::representatives() const noexcept { return impl_->reps; }

void Group::check(Element a) const {
  if (a >= impl_->order) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(a) + " out of range for group of order " +
                    std::to_string(impl_->order));
  }
}

Element Group::add(Element a, Element b) const {
  const auto& g = *impl_;
  if (!g.is_product()) {
    return g.label_of[g.parent->add(g.reps[a], g.reps[b])];
  }
  if (g.factors.size() == 1) {
    const std::uint32_t n = g.order;
    const std::uint32_t s = a + b;
    return s >= n ? s - n : s;
  }
  Element out = 0;
  for (std::size_t i = g.factors.size(); i-- > 0;) {
    const std::uint32_t n = g.factors[i];
    const std::uint32_t xa = (a / g.strides[i]) % n;
    const std::uint32_t xb = (b / g.strides[i]) % n;
    std::uint32_t s = xa + xb;
    if (s >= n) s -= n;
    out += s * g.strides[i];
  }
  return out;
}

Element Group::neg(Element a) const {
  const auto& g = *impl_;
  if (!g.is_product()) {
    return g.label_of[g.parent->neg(g.reps[a])];
  }
  Element out = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const std::uint32_t n = g.factors[i];
    const std::uint32_t x = (a / g.strides[i]) % n;
    out += (x == 0 ? 0 : n - x) * g.strides[i];
  }
  return out;
}

Element Group::scale(Element a, std::uint64_t times) const {
  Element result = 0;
  Element base = a;
  while (times != 0) {
    if (times & 1u) result = add(result, base);
    base = add(base, base);
    times >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> Group::decode(Element a) const {
  const auto& g = *impl_;
  if (!g.is_product()) {
    throw Error(ErrorCode::GroupMismatch, "decode is only defined for product groups");
  }
  check(a);
  std::vector<std::uint32_t> coords(g.factors.size());
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    coords[i] = (a / g.strides[i]) % g.factors[i];
  }
  return coords;
}

Element Group::encode(std::span<const std::uint32_t> coords) const {
  const auto& g = *impl_;
  if (!g.is_product() || coords.size() != g.factors.size()) {
    throw Error(ErrorCode::GroupMismatch, "coordinate arity does not match group factors");
  }
  Element out = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= g.factors[i]) {
      throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(i) + " out of range");
    }
    out += coords[i] * g.strides[i];
  }
  return out;
}

std::string Group::name() const {
  const auto& g = *impl_;
  if (!g.is_product()) {
    return g.parent->name() + "/Q" + std::to_string(g.parent->order() / g.order);
  }
  std::string out;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i) out += 'x';
    out += 'Z';
    out += std::to_string(g.factors[i]);
  }
  return out;
}

bool operator==(const Group& a, const Group& b) noexcept {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  if (x.is_product() != y.is_product() || x.order != y.order) return false;
  if (x.is_product()) return x.factors == y.factors;
  return *x.parent == *y.parent && x.reps == y.reps;
}

Group make_group(std::span<const std::uint32_t> factors) {
  if (factors.empty()) throw Error(ErrorCode::EmptyFactorList, "factor list is empty");
  auto impl = std::make_shared<detail::GroupImpl>();
  std::uint64_t order = 1;
  for (std::uint32_t n : factors) {
    if (n == 0) throw Error(ErrorCode::InvalidFactor, "factors must be >= 1");
    order *= n;
    if (order > Group::kOrderCap) {
      throw Error(ErrorCode::OrderCapExceeded,
                  "group order exceeds cap of " + std::to_string(Group::kOrderCap));
    }
  }
  impl->order = static_cast<std::uint32_t>(order);
  impl->factors.assign(factors.begin(), factors.end());
  impl->strides.resize(factors.size());
  std::uint32_t stride = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    impl->strides[i] = stride;
    stride *= factors[i];
  }
  return Group(std::move(impl));
}

Group make_quotient_group(const Group& parent, std::vector<Element> reps,
                          std::vector<std::uint32_t> label_of) {
  auto impl = std::make_shared<detail::GroupImpl>();
  impl->order = static_cast<std::uint32_t>(reps.size());
  impl->parent = std::make_shared<const Group>(parent);
  impl->reps = std::move(reps);
  impl->label_of = std::move(label_of);
  return Group(std::move(impl));
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFactorList: return "EmptyFactorList";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DegenerateExponents: return "DegenerateExponents";
    case ErrorCode::ExponentCap: return "ExponentCap";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace isoper
