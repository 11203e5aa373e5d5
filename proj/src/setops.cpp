#include "isoper/setops.hpp"

#include <algorithm>

#include "isoper/error.hpp"
#include "isoper/kernels.hpp"

namespace isoper {

GroupSet minkowski_sum(const GroupSet& a, const GroupSet& b) {
  require_same_group(a, b);
  return GroupSet(a.group(), kernels::sumset(a.group(), a.mask(), b.mask()));
}

GroupSet signed_sumset(const GroupSet& s, unsigned r, unsigned t) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "signed sumset of the empty set");
  if (r == 0 && t == 0) throw Error(ErrorCode::DegenerateExponents, "r and t are both zero");
  if (r > kExponentCap || t > kExponentCap) {
    throw Error(ErrorCode::ExponentCap, "exponents are capped at " + std::to_string(kExponentCap));
  }
  const Group& g = s.group();
  auto repeated = [&](const GroupSet& base, unsigned times) {
    GroupSet acc = GroupSet::singleton(g, 0);
    for (unsigned i = 0; i < times; ++i) acc = minkowski_sum(acc, base);
    return acc;
  };
  const GroupSet pos = repeated(s, r);
  if (t == 0) return pos;
  return minkowski_sum(pos, repeated(s, t).negate());
}

bool is_periodic_under(const GroupSet& a, const Subgroup& h) {
  if (!(a.group() == h.group())) throw Error(ErrorCode::GroupMismatch, "subgroup of another group");
  return minkowski_sum(a, h.members()) == a;
}

Subgroup period(const GroupSet& a) {
  const Group& g = a.group();
  if (a.empty() || a.size() == g.order()) return Subgroup::whole(g);
  // Every period lies in a - a0.
  const Element a0 = a.min();
  GroupSet stab(g);
  BitMask shifted(g.order());
  for (Element y : a.elements()) {
    const Element x = g.sub(y, a0);
    shifted.clear();
    kernels::translate_or(g, a.mask(), x, shifted);
    if (shifted == a.mask()) stab.insert(x);
  }
  return Subgroup::from_set(stab);
}

std::optional<ArithmeticProgression> detect_arithmetic_progression(const GroupSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "progression test on the empty set");
  const Group& g = a.group();
  if (a.size() == 1) return ArithmeticProgression{a.min(), 0};
  const std::size_t len = a.size();
  const auto elems = a.elements();
  for (Element d = 1; d < g.order(); ++d) {
    // order of d, capped at len
    std::size_t ord = 1;
    for (Element y = d; y != 0 && ord <= len; y = g.add(y, d)) ++ord;
    if (ord < len) continue;
    if (ord == len) {
      // a must be a coset of <d>
      const Element x = elems.front();
      Element y = x;
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i, y = g.add(y, d)) ok = a.contains(y);
      if (ok) return ArithmeticProgression{x, d};
      continue;
    }
    std::optional<Element> start;
    bool unique = true;
    for (Element x : elems) {
      if (!a.contains(g.sub(x, d))) {
        if (start) {
          unique = false;
          break;
        }
        start = x;
      }
    }
    if (!unique || !start) continue;
    Element y = *start;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i, y = g.add(y, d)) ok = a.contains(y);
    if (ok) return ArithmeticProgression{*start, d};
  }
  return std::nullopt;
}

HDecomposition h_decompose(const GroupSet& a, const Subgroup& h) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "decomposition of the empty set");
  if (!(a.group() == h.group())) throw Error(ErrorCode::NotASubgroup, "subgroup of another group");
  HDecomposition out{h, {}, 0};
  std::vector<std::int64_t> slot(h.index(), -1);
  for (Element x : a.elements()) {
    const auto c = h.coset_of(x);
    if (slot[c] < 0) {
      slot[c] = static_cast<std::int64_t>(out.components.size());
      out.components.emplace_back(a.group());
    }
    out.components[static_cast<std::size_t>(slot[c])].insert(x);
  }
  std::sort(out.components.begin(), out.components.end(), [](const GroupSet& x, const GroupSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.min() < y.min();
  });
  return out;
}

bool is_modular_progression(const GroupSet& a, const Subgroup& h) {
  auto [q, phi] = quotient(a.group(), h);
  return is_arithmetic_progression(phi.image(a));
}

}  // namespace isoper
