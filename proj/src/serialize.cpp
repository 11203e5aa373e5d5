#include "isoper/serialize.hpp"

#include "isoper/error.hpp"

namespace isoper {

Json to_json(const GroupSet& s) {
  Json arr = Json::array();
  s.mask().for_each([&](std::size_t i) { arr.push_back(i); });
  return arr;
}

Json to_json(const Subgroup& h) { return to_json(h.members()); }

Json to_json(const Verdict& v) {
  Json j;
  j["theorem"] = v.theorem;
  j["hypotheses_met"] = v.hypotheses_met;
  j["holds"] = v.holds;
  j["vacuous"] = v.vacuous;
  j["witness"] = v.witness;
  if (v.counterexample) j["counterexample"] = *v.counterexample;
  return j;
}

std::string to_hex(const GroupSet& s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = s.group().order();
  std::string out;
  bool leading = true;
  for (std::size_t nib = (n + 3) / 4; nib-- > 0;) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = nib * 4 + b;
      if (i < n && s.mask().test(i)) v |= 1u << b;
    }
    if (leading && v == 0) continue;
    leading = false;
    out += kDigits[v];
  }
  return "0x" + (out.empty() ? std::string("0") : out);
}

GroupSet from_hex(const Group& g, std::string_view text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw Error(ErrorCode::ParseError, "hex set must start with 0x and have at least one digit");
  }
  GroupSet s(g);
  const std::string_view digits = text.substr(2);
  const std::size_t nd = digits.size();
  for (std::size_t pos = 0; pos < nd; ++pos) {
    const char c = digits[pos];
    unsigned v;
    if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
    else {
      throw Error(ErrorCode::ParseError,
                  "invalid hex digit '" + std::string(1, c) + "' at position " + std::to_string(pos + 2));
    }
    const std::size_t nib = nd - 1 - pos;
    for (unsigned b = 0; b < 4; ++b) {
      if (v & (1u << b)) s.insert(static_cast<Element>(nib * 4 + b));
    }
  }
  return s;
}

}  // namespace isoper
