#include "doctest.h"
#include "isoper/error.hpp"
#include "isoper/group_set.hpp"
#include "isoper/parse.hpp"
#include "isoper/serialize.hpp"
#include "support.hpp"

using namespace isoper;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("cyclic and product groups") {
  const Group z12 = make_group({12});
  CHECK(z12.order() == 12);
  CHECK(z12.is_cyclic_product());
  CHECK(z12.add(7, 8) == 3);
  CHECK(z12.neg(5) == 7);
  CHECK(z12.neg(0) == 0);
  CHECK(z12.scale(5, 5) == 1);
  CHECK(z12.name() == "Z12");

  const Group g = make_group({4, 2});
  CHECK(g.order() == 8);
  CHECK_FALSE(g.is_cyclic_product());
  CHECK(g.name() == "Z4xZ2");
  // (3,1) + (2,1) = (1,0)
  CHECK(g.add(3 + 4 * 1, 2 + 4 * 1) == 1);
  CHECK(g.decode(7) == std::vector<std::uint32_t>{3, 1});
  const std::vector<std::uint32_t> c{2, 1};
  CHECK(g.encode(c) == 6);
}

TEST_CASE("group arithmetic agrees with the oracle") {
  for (const auto& f : small_groups(9)) {
    auto [lib, ref] = group_pair(f);
    for (Element a = 0; a < lib.order(); ++a) {
      CHECK(lib.neg(a) == ref.neg(a));
      for (Element b = 0; b < lib.order(); ++b) CHECK(lib.add(a, b) == ref.add(a, b));
    }
  }
}

TEST_CASE("group construction errors") {
  CHECK(code_of([] { make_group(std::span<const std::uint32_t>{}); }) == ErrorCode::EmptyFactorList);
  CHECK(code_of([] { make_group({3, 0}); }) == ErrorCode::InvalidFactor);
  CHECK(code_of([] { make_group({1024, 2048}); }) == ErrorCode::OrderCapExceeded);
  CHECK(make_group({1024, 1024}).order() == (1u << 20));
  CHECK(code_of([] { make_group({5}).check(5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("group sets") {
  const Group g = make_group({12});
  const GroupSet s = GroupSet::of(g, {0, 1, 6});
  CHECK(s.size() == 3);
  CHECK(s.min() == 0);
  CHECK(s.translate(11) == GroupSet::of(g, {11, 0, 5}));
  CHECK(s.negate() == GroupSet::of(g, {0, 11, 6}));
  CHECK(s.complement().size() == 9);
  CHECK((s | GroupSet::of(g, {2})).size() == 4);
  CHECK((s & GroupSet::of(g, {1, 2})) == GroupSet::of(g, {1}));
  CHECK((s - GroupSet::of(g, {1})) == GroupSet::of(g, {0, 6}));
  CHECK(code_of([&] { GroupSet(g).min(); }) == ErrorCode::EmptySet);
  CHECK(code_of([&] { GroupSet::of(g, {12}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { (void)(s | GroupSet::of(make_group({13}), {1})); }) == ErrorCode::GroupMismatch);

  // Canonical order: cardinality first, then the mask read as a number.
  CHECK(canonical_less(GroupSet::of(g, {5}), GroupSet::of(g, {0, 1})));
  CHECK(canonical_less(GroupSet::of(g, {1, 2}), GroupSet::of(g, {0, 6})));
  CHECK_FALSE(canonical_less(GroupSet::of(g, {0, 6}), GroupSet::of(g, {1, 2})));
}

TEST_CASE("translation matches the oracle on product groups") {
  for (const auto& f : std::vector<std::vector<std::uint32_t>>{{6, 4}, {3, 5}, {2, 2, 3}, {7}, {64}}) {
    auto [lib, ref] = group_pair(f);
    oracle::Mask m = 0x9d3a5c1fe2b47ull & ref.full();
    for (Element t = 0; t < lib.order(); ++t) {
      CHECK(to_mask(to_set(lib, m).translate(t)) == oracle::translate(ref, m, t));
    }
  }
}

TEST_CASE("parsing groups") {
  CHECK(parse_group("Z12").name() == "Z12");
  CHECK(parse_group("z4xZ2").name() == "Z4xZ2");
  CHECK(parse_group(" Z2XZ2xz3 ").order() == 12);
  for (const char* bad : {"", "12", "Z", "Zx2", "Z4x", "Z4*Z2", "Z0", "Z4 Z2", "Z99999999999999999999"}) {
    CHECK_MESSAGE(code_of([&] { parse_group(bad); }) == ErrorCode::ParseError, bad);
  }
  try {
    parse_group("Z4xY2");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("parsing sets") {
  const Group g = make_group({12});
  CHECK(parse_set(g, "0,1,6") == GroupSet::of(g, {0, 1, 6}));
  CHECK(parse_set(g, " 6 , 1,0 ") == GroupSet::of(g, {0, 1, 6}));
  CHECK(parse_set(g, "0x43") == GroupSet::of(g, {0, 1, 6}));
  CHECK(code_of([&] { parse_set(g, "0,,1"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_set(g, ""); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_set(g, "0;1"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_set(g, "0,12"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { parse_set(g, "0x0"); }) == ErrorCode::EmptySet);
  CHECK(code_of([&] { parse_set(g, "0x1000"); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("parsing k ranges") {
  CHECK(parse_k_range("3").first == 3);
  CHECK(parse_k_range("3").last == 3);
  CHECK(parse_k_range("2..4").first == 2);
  CHECK(parse_k_range("2..4").last == 4);
  for (const char* bad : {"", "0", "4..2", "2.4", "2..", "x"}) {
    CHECK_MESSAGE(code_of([&] { parse_k_range(bad); }) == ErrorCode::ParseError, bad);
  }
}

TEST_CASE("serialization") {
  const Group g = make_group({12});
  const GroupSet s = GroupSet::of(g, {6, 0, 1});
  CHECK(to_json(s).dump() == "[0,1,6]");
  CHECK(to_hex(s) == "0x43");
  CHECK(to_hex(GroupSet(g)) == "0x0");
  CHECK(from_hex(g, "0x43") == s);
  CHECK(from_hex(g, "0X043") == s);
  const Group big = make_group({100});
  const GroupSet t = GroupSet::of(big, {0, 64, 99});
  CHECK(from_hex(big, to_hex(t)) == t);
  CHECK(to_hex(t) == "0x8000000010000000000000001");

  Verdict v = Verdict::checked("kneser");
  v.require(false, "clause text", Json{{"x", 1}});
  v.require(false, "second");
  const Json j = to_json(v);
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"]["clause"] == "clause text");
  CHECK(to_json(Verdict::unmet("kneser")).contains("counterexample") == false);
}
