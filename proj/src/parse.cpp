#include "isoper/parse.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <string>
#include <vector>

#include "isoper/error.hpp"
#include "isoper/serialize.hpp"

namespace isoper {

namespace {

[[noreturn]] void fail_at(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::ParseError, "position " + std::to_string(pos) + ": " + what);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect_ci(char c) {
    if (std::tolower(static_cast<unsigned char>(peek())) != c) {
      fail_at(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    const auto* begin = text_.data() + pos_;
    const auto* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) fail_at(start, "number too large");
    if (ec != std::errc() || ptr == begin) fail_at(start, "expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Group parse_group(std::string_view text) {
  Cursor c(text);
  std::vector<std::uint32_t> factors;
  c.skip_space();
  for (;;) {
    c.expect_ci('z');
    const std::size_t at = c.pos();
    const std::uint64_t n = c.number();
    if (n == 0) fail_at(at, "factor must be positive");
    if (n > Group::kOrderCap) fail_at(at, "factor exceeds the order cap");
    factors.push_back(static_cast<std::uint32_t>(n));
    if (c.done() || std::isspace(static_cast<unsigned char>(c.peek()))) break;
    c.expect_ci('x');
  }
  c.skip_space();
  if (!c.done()) fail_at(c.pos(), "unexpected trailing characters");
  return make_group(factors);
}

GroupSet parse_set(const Group& g, std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  if (text.substr(lead).starts_with("0x") || text.substr(lead).starts_with("0X")) {
    GroupSet s = from_hex(g, text.substr(lead));
    if (s.empty()) throw Error(ErrorCode::EmptySet, "the set is empty");
    return s;
  }
  Cursor c(text);
  GroupSet s(g);
  for (;;) {
    c.skip_space();
    const std::size_t at = c.pos();
    const std::uint64_t x = c.number();
    if (x >= g.order()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "position " + std::to_string(at) + ": element " + std::to_string(x) +
                      " is outside a group of order " + std::to_string(g.order()));
    }
    s.insert(static_cast<Element>(x));
    c.skip_space();
    if (c.done()) break;
    if (!c.accept(',')) fail_at(c.pos(), "expected ','");
  }
  return s;
}

KRange parse_k_range(std::string_view text) {
  Cursor c(text);
  c.skip_space();
  KRange r;
  const std::size_t at = c.pos();
  const std::uint64_t first = c.number();
  std::uint64_t last = first;
  if (c.accept('.')) {
    if (!c.accept('.')) fail_at(c.pos(), "expected '..'");
    last = c.number();
  }
  c.skip_space();
  if (!c.done()) fail_at(c.pos(), "unexpected trailing characters");
  if (first == 0) fail_at(at, "k must be at least 1");
  if (last < first) fail_at(at, "empty range");
  if (last > 64) fail_at(at, "k too large");
  r.first = static_cast<std::size_t>(first);
  r.last = static_cast<std::size_t>(last);
  return r;
}

}  // namespace isoper
