#include "doctest.h"
#include "isoper/error.hpp"
#include "isoper/serialize.hpp"
#include "isoper/structure.hpp"
#include "support.hpp"

using namespace isoper;

namespace {

bool has_case(const CriticalPairReport& r, CriticalCase c) {
  return std::find(r.cases.begin(), r.cases.end(), c) != r.cases.end();
}

}  // namespace

TEST_CASE("hyper-atoms agree with the oracle") {
  for (const auto& f : small_groups(12)) {
    auto [lib, ref] = group_pair(f);
    const auto subs = oracle::subgroups(ref);
    for (oracle::Mask s = 1; s <= ref.full(); s += (ref.n > 10 ? 3 : 1)) {
      const auto ctx = build_context(to_set(lib, s));
      const auto expected = oracle::hyper_atom(ref, s, subs);
      if (!expected) {
        CHECK_THROWS_AS(hyper_atom(ctx), Error);
        continue;
      }
      const auto got = hyper_atom(ctx);
      CHECK(got.subgroup.order() == oracle::card(*expected));
      CHECK(to_mask(got.subgroup.members()) == *expected);
    }
  }
}

TEST_CASE("desert sequences agree with the oracle") {
  for (const auto& f : small_groups(12)) {
    auto [lib, ref] = group_pair(f);
    for (oracle::Mask s = 1; s <= ref.full(); s += (ref.n > 10 ? 3 : 1)) {
      const auto ctx = build_context(to_set(lib, s));
      const auto expected = oracle::desert(ref, s);
      if (!expected.defined) {
        CHECK_THROWS_AS(desert_sequence(ctx), Error);
        continue;
      }
      const auto got = desert_sequence(ctx);
      CHECK(got.length == expected.length);
      CHECK(to_mask(got.sub_atom.members()) == expected.sub_atom);
      REQUIRE(got.steps.size() == expected.subgroups.size());
      for (std::size_t i = 0; i < got.steps.size(); ++i) {
        CHECK(to_mask(got.steps[i].fragment_subgroup.members()) == expected.subgroups[i]);
      }
    }
  }
}

TEST_CASE("worked desert sequences") {
  const Group z16 = make_group({16});
  const auto a = desert_sequence(build_context(GroupSet::of(z16, {0, 1, 8, 9})));
  CHECK(a.length == 0);
  CHECK(a.sub_atom.members() == GroupSet::of(z16, {0, 8}));

  const auto b = desert_sequence(build_context(GroupSet::of(z16, {0, 1, 4, 5, 8, 12})));
  CHECK(b.length == 1);
  REQUIRE(b.steps.size() == 2);
  CHECK(b.steps[1].set == GroupSet::of(z16, {0, 4}));
  CHECK(b.steps[1].fragment_subgroup.is_trivial());
  CHECK(b.sub_atom.members() == GroupSet::of(z16, {0, 4, 8, 12}));
  const auto bh = desert_sequence(build_context(GroupSet::of(z16, {0, 1, 4, 5, 8, 12})), DesertMode::HyperAtom);
  CHECK(bh.sub_atom.members() == GroupSet::of(z16, {0, 4, 8, 12}));

  const Group z12 = make_group({12});
  try {
    desert_sequence(build_context(GroupSet::of(z12, {0, 1, 6})));
    FAIL("expected HypothesisNotMet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisNotMet);
  }
}

TEST_CASE("worked hyper-atoms") {
  const Group z12 = make_group({12});
  const auto h = hyper_atom(build_context(GroupSet::of(z12, {0, 1, 6})));
  CHECK(h.kappa1 == 2);
  CHECK(h.subgroup.members() == GroupSet::of(z12, {0, 6}));
  const Group z16 = make_group({16});
  CHECK(hyper_atom(build_context(GroupSet::of(z16, {0, 1, 4, 5, 8, 12}))).subgroup.members() ==
        GroupSet::of(z16, {0, 4, 8, 12}));
}

TEST_CASE("critical pair reports") {
  const Group z12 = make_group({12});
  const auto r = analyze_critical_pair(build_context(GroupSet::of(z12, {0, 1, 6})), 2);
  CHECK(r.critical);
  CHECK(*r.hyper_atom == Subgroup::from_set(GroupSet::of(z12, {0, 6})));
  CHECK(*r.smaller_component == GroupSet::of(z12, {1}));
  CHECK(r.rest_is_periodic);
  CHECK(r.component_is_critical);
  CHECK(r.quotient_set_is_ap);
  CHECK(r.tag == CriticalCase::ArithmeticProgression);

  const Group z16 = make_group({16});
  const auto q = analyze_critical_pair(build_context(GroupSet::of(z16, {0, 1, 4, 5, 8, 12})), 2);
  CHECK(q.critical);
  CHECK(q.sumset_size == 11);
  CHECK(q.hyper_atom->members() == GroupSet::of(z16, {0, 4, 8, 12}));
  CHECK(*q.smaller_component == GroupSet::of(z16, {1, 5}));
  CHECK(q.quotient_set_is_ap);
  CHECK(has_case(q, CriticalCase::ArithmeticProgression));

  const auto p = analyze_critical_pair(build_context(GroupSet::of(z16, {0, 1, 8, 9})), 2);
  CHECK_FALSE(p.critical);
  CHECK(has_case(p, CriticalCase::SubatomPeriodic));

  // An AP is never critical in this sense.
  CHECK_FALSE(analyze_critical_pair(build_context(GroupSet::of(z12, {0, 1, 2})), 2).critical);
}

TEST_CASE("helpers") {
  const Group z4 = make_group({4});
  CHECK(is_complement_pair(build_context(GroupSet::of(z4, {0, 1}))));
  const Group z5 = make_group({5});
  CHECK_FALSE(is_complement_pair(build_context(GroupSet::of(z5, {0, 1}))));
  const Group z7 = make_group({7});
  CHECK(is_vosper(GroupSet::of(z7, {0, 1, 3})));
  CHECK_FALSE(is_vosper(GroupSet::of(make_group({12}), {0, 1, 6})));
  CHECK_FALSE(is_k_separable(build_context(GroupSet::of(z4, {0, 1})), 2));
  CHECK(is_k_separable(build_context(GroupSet::of(z7, {0, 1})), 3));
}

TEST_CASE("verifier verdicts on worked instances") {
  const Group z12 = make_group({12});
  const auto c12 = build_context(GroupSet::of(z12, {0, 1, 6}));
  const Group z16 = make_group({16});
  const auto c16a = build_context(GroupSet::of(z16, {0, 1, 8, 9}));
  const auto c16b = build_context(GroupSet::of(z16, {0, 1, 4, 5, 8, 12}));

  const Verdict kn = verify_kneser(c12, 2);
  CHECK(kn.hypotheses_met);
  CHECK(kn.holds);
  CHECK(kn.witness["sumset_size"] == 5);
  CHECK_FALSE(verify_kneser(c16a, 2).hypotheses_met);

  const Verdict sp = verify_subatom_period(c16a, 2);
  CHECK(sp.hypotheses_met);
  CHECK(sp.holds);
  CHECK(sp.witness["sub_atom"] == Json::parse("[0,8]"));
  CHECK_FALSE(verify_subatom_period(c16b, 2).hypotheses_met);
  CHECK_FALSE(verify_subatom_period(c12, 2).hypotheses_met);

  const Verdict tri = analyze_signed_sumset(c12, 1, 1);
  CHECK(tri.holds);
  CHECK(tri.witness["size"] == 6);
  CHECK(tri.witness["cases"] == Json::parse(R"(["large","hyperatom_periodic"])"));
  CHECK_THROWS_AS(analyze_signed_sumset(c12, 1, 2), Error);
  CHECK_THROWS_AS(analyze_signed_sumset(c12, 1, 0), Error);

  for (const auto* ctx : {&c12, &c16b}) {
    CHECK(verify_critical_pair(*ctx, 2).holds);
    CHECK(verify_critical_pair(*ctx, 2).hypotheses_met);
    CHECK(verify_critical_decomposition(*ctx, 2).holds);
    CHECK(verify_kemperman_decomposition(*ctx, 2).holds);
  }
  CHECK_FALSE(verify_critical_pair(c16a, 2).hypotheses_met);
  CHECK(verify_critical_pair(c16b, 2).witness["S0"] == Json::parse("[1,5]"));

  for (const Verdict& v : verify_structure_theorems(c12)) {
    CHECK_MESSAGE(v.hypotheses_met, v.theorem);
    CHECK_MESSAGE(v.holds, v.theorem);
  }
  CHECK(verify_two_atom_subgroup(c12).vacuous);
  CHECK(verify_hyperatom_quotient(c12).witness["quotient_set"] == Json::parse("[0,1]"));

  CHECK(verify_atom_intersection(c12, 2).holds);
  CHECK(verify_kappa_monotone(c12, 2).holds);
  CHECK_FALSE(verify_kappa_monotone(c12, 1).hypotheses_met);
  CHECK(verify_atom_degree(c16b, 1).holds);
  CHECK(verify_fragment_duality(c12, 2).holds);
  CHECK_FALSE(verify_fragment_duality(build_context(GroupSet::of(make_group({4}), {0, 1})), 2).hypotheses_met);
}

TEST_CASE("check registry") {
  CHECK(check_ids().size() == 15);
  CHECK(check_ids().front() == "kneser");
  CHECK(is_check_id("fragment-duality"));
  CHECK_FALSE(is_check_id("thm"));
  const Group z12 = make_group({12});
  const auto ctx = build_context(GroupSet::of(z12, {0, 1, 6}));
  CHECK_THROWS_AS(run_check("nope", ctx, {}), Error);
  for (const auto& id : check_ids()) {
    const Verdict v = run_check(id, ctx, {});
    CHECK(v.theorem == id);
    CHECK_MESSAGE(v.holds, id);
    CHECK(v.counterexample.has_value() == !v.holds);
  }
}

TEST_CASE("every check holds on every set of the small groups") {
  for (const auto& f : small_groups(9)) {
    const Group g = make_group(std::span<const std::uint32_t>(f));
    const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
    for (std::uint64_t m = 1; m <= full; ++m) {
      GroupSet s(g);
      for (Element x = 0; x < g.order(); ++x)
        if ((m >> x) & 1U) s.insert(x);
      const auto ctx = build_context(s);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& id : check_ids()) {
          CheckParams p;
          p.k = k;
          p.r = 2;
          const Verdict v = run_check(id, ctx, p);
          CHECK_MESSAGE(v.holds, id, " ", g.name(), " ", to_json(s).dump(), " k=", k);
        }
      }
    }
  }
}
