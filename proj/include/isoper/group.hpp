#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace isoper {

// Elements are indices in [0, order). For groups built from factors the index
// is the little-endian mixed-radix encoding x_1 + n_1 (x_2 + n_2 (x_3 + ...)).
using Element = std::uint32_t;

namespace detail {
struct GroupImpl;
}

// A finite abelian group. Either a product of cyclic factors, or a quotient
// of another group carrying the canonical coset labeling (see quotient()).
// Copies share the immutable representation.
class Group {
 public:
  static constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 20;

  Group();  // trivial group

  std::uint32_t order() const noexcept;
  // Empty for quotient groups.
  std::span<const std::uint32_t> factors() const noexcept;
  bool is_product() const noexcept;
  bool is_cyclic_product() const noexcept;  // product with a single factor

  Element zero() const noexcept { return 0; }
  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // a added to itself `times` times.
  Element scale(Element a, std::uint64_t times) const;

  // Mixed-radix coordinates; only defined for product groups.
  std::vector<std::uint32_t> decode(Element a) const;
  Element encode(std::span<const std::uint32_t> coords) const;

  // "Z4xZ2" for products, "Z12/H" style description for quotients.
  std::string name() const;

  // Throws IndexOutOfRange when a >= order().
  void check(Element a) const;

  friend bool operator==(const Group& a, const Group& b) noexcept;

  // Row decomposition used by the word-level translation kernel: the first
  // factor is the contiguous axis. Only valid for product groups.
  std::uint32_t row_length() const noexcept;

  // Quotient groups only: the parent group and the smallest representative
  // of each coset label.
  const Group* parent() const noexcept;
  std::span<const Element> representatives() const noexcept;

 private:
  explicit Group(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}
  friend Group make_group(std::span<const std::uint32_t> factors);
  friend Group make_quotient_group(const Group& parent, std::vector<Element> reps,
                                   std::vector<std::uint32_t> label_of);

  std::shared_ptr<const detail::GroupImpl> impl_;
};

// Errors: EmptyFactorList, InvalidFactor (a zero factor), OrderCapExceeded.
Group make_group(std::span<const std::uint32_t> factors);
inline Group make_group(std::initializer_list<std::uint32_t> factors) {
  return make_group(std::span<const std::uint32_t>(factors.begin(), factors.size()));
}

// Builds the group on coset labels. `reps[l]` is a representative of label l
// and `label_of[x]` the label of parent element x. Used by quotient().
Group make_quotient_group(const Group& parent, std::vector<Element> reps,
                          std::vector<std::uint32_t> label_of);

}  // namespace isoper
