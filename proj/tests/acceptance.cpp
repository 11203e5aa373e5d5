// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "isoper/cli.hpp"
#include "isoper/error.hpp"
#include "isoper/serialize.hpp"
#include "isoper/structure.hpp"
#include "isoper/sweep.hpp"
#include "support.hpp"

using namespace isoper;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

// Calls f on every non-empty subset of g.
void for_each_set(const Group& g, const std::function<void(const GroupSet&)>& f) {
  const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
  for (std::uint64_t m = 1; m <= full; ++m) {
    GroupSet s(g);
    for (Element x = 0; x < g.order(); ++x)
      if ((m >> x) & 1U) s.insert(x);
    f(s);
  }
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  void add(const Verdict& v, const GroupSet& s) {
    if (!v.hypotheses_met) return;
    ++checked;
    if (v.holds) return;
    if (failed++ == 0) {
      first_failure = v.theorem + " on " + s.group().name() + " " + to_json(s).dump();
      if (v.counterexample) first_failure += " " + v.counterexample->dump();
    }
  }
  bool ok() const { return failed == 0; }
  std::string str() const {
    std::string out = std::to_string(checked) + " checked, " + std::to_string(failed) + " failed";
    if (failed) out += " (first: " + first_failure + ")";
    return out;
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

Outcome kneser_suite() {
  const auto t = Clock::now();
  Tally tally;
  for (std::uint32_t n = 5; n <= 12; ++n) {
    for_each_set(make_group({n}), [&](const GroupSet& s) {
      const auto ctx = build_context(s);
      for (std::size_t k = 2; k <= 4; ++k) tally.add(verify_kneser(ctx, k), s);
    });
  }
  const double secs = seconds_since(t);
  return {tally.ok() && secs < 60, tally.str() + ", " + std::to_string(secs) + " s"};
}

Outcome cauchy_davenport() {
  const auto t = Clock::now();
  std::uint64_t pairs = 0, bad_pairs = 0, sets = 0, bad_kappa = 0;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const Group g = make_group({p});
    std::vector<GroupSet> all;
    for_each_set(g, [&](const GroupSet& s) { all.push_back(s); });
    for (const auto& a : all) {
      for (const auto& b : all) {
        ++pairs;
        if (minkowski_sum(a, b).size() < std::min<std::size_t>(p, a.size() + b.size() - 1)) ++bad_pairs;
      }
      const auto ctx = build_context(a);
      if (ctx.vertex_count() != p) continue;  // not generating
      const auto rep = kappa(ctx, 1);
      if (!rep.separable) continue;
      ++sets;
      if (*rep.kappa + 1 != a.size()) ++bad_kappa;
    }
  }
  const double secs = seconds_since(t);
  std::ostringstream d;
  d << pairs << " pairs (" << bad_pairs << " failed), " << sets << " separable generating sets (" << bad_kappa
    << " with kappa_1 != |S|-1), " << secs << " s";
  return {bad_pairs == 0 && bad_kappa == 0 && secs < 60, d.str()};
}

std::vector<Group> atom_suite_groups() {
  std::vector<Group> out;
  for (std::uint32_t n = 2; n <= 10; ++n) out.push_back(make_group({n}));
  out.push_back(make_group({2, 2}));
  out.push_back(make_group({2, 4}));
  return out;
}

// Generating sets containing 0.
void for_each_generating(const Group& g, const std::function<void(const GroupSet&, const CayleyContext&)>& f) {
  for_each_set(g, [&](const GroupSet& s) {
    if (!s.contains(0)) return;
    const auto ctx = build_context(s);
    if (ctx.vertex_count() == g.order()) f(s, ctx);
  });
}

Outcome atom_structure() {
  Tally subgroup, intersection, monotone;
  for (const Group& g : atom_suite_groups()) {
    for_each_generating(g, [&](const GroupSet& s, const CayleyContext& ctx) {
      subgroup.add(verify_atom_subgroup(ctx), s);
      for (std::size_t k = 1; k <= 3; ++k) intersection.add(verify_atom_intersection(ctx, k), s);
      for (std::size_t k = 2; k <= 3; ++k) monotone.add(verify_kappa_monotone(ctx, k), s);
    });
  }
  return {subgroup.ok() && intersection.ok() && monotone.ok(),
          "1-atom subgroup: " + subgroup.str() + "; atom intersections: " + intersection.str() +
              "; kappa monotone: " + monotone.str()};
}

Outcome duality() {
  Tally tally;
  std::uint64_t instances = 0;
  for (const Group& g : atom_suite_groups()) {
    for_each_generating(g, [&](const GroupSet& s, const CayleyContext& ctx) {
      if (!is_k_separable(ctx, 2)) return;
      ++instances;
      for (std::size_t k = 1; k <= 3; ++k) tally.add(verify_fragment_duality(ctx, k), s);
    });
  }
  return {tally.ok() && instances > 0, std::to_string(instances) + " 2-separable instances; " + tally.str()};
}

// Every abelian group of order at most `limit`, as invariant factors d1 | d2 | ...
void invariant_factor_lists(std::uint32_t limit, std::vector<std::uint32_t>& prefix,
                            std::vector<std::vector<std::uint32_t>>& out) {
  std::uint32_t order = 1;
  for (auto d : prefix) order *= d;
  if (!prefix.empty()) out.push_back(prefix);
  const std::uint32_t step = prefix.empty() ? 1 : prefix.back();
  for (std::uint32_t d = std::max<std::uint32_t>(2, step); order * d <= limit; d += step) {
    if (d % step != 0) continue;
    prefix.push_back(d);
    invariant_factor_lists(limit, prefix, out);
    prefix.pop_back();
  }
}

Outcome universal_period() {
  Tally exhaustive, random, hyper_mode;
  std::uint64_t strict_violations = 0, instances = 0;
  const auto run_one = [&](const GroupSet& s, const CayleyContext& ctx, std::size_t k, Tally& tally) {
    const Verdict v = verify_subatom_period(ctx, k);
    tally.add(v, s);
    ++instances;
    if (v.hypotheses_met && v.witness.contains("strict_halving_violations")) {
      strict_violations += v.witness["strict_halving_violations"].size();
    }
    hyper_mode.add(verify_subatom_period(ctx, k, DesertMode::HyperAtom), s);
  };
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for_each_set(make_group({n}), [&](const GroupSet& s) {
      const auto ctx = build_context(s);
      for (std::size_t k = 1; k <= 4; ++k) run_one(s, ctx, k, exhaustive);
    });
  }
  std::vector<std::vector<std::uint32_t>> groups;
  std::vector<std::uint32_t> prefix;
  invariant_factor_lists(32, prefix, groups);
  std::mt19937_64 rng(0x5eed2026);
  for (int i = 0; i < 10000; ++i) {
    const auto& f = groups[bounded_draw(rng, groups.size())];
    const Group g = make_group(std::span<const std::uint32_t>(f));
    const GroupSet s = random_nonempty_set(g, rng);
    const std::size_t k = 1 + bounded_draw(rng, 4);
    run_one(s, build_context(s), k, random);
  }
  std::ostringstream d;
  d << "exhaustive: " << exhaustive.str() << "; random over " << groups.size() << " groups: " << random.str()
    << "; strict halving violations logged: " << strict_violations
    << "; hyper-atom mode (informational): " << hyper_mode.str();
  return {exhaustive.ok() && random.ok(), d.str()};
}

Outcome critical_pairs() {
  Tally decomposition, pair, kemperman;
  std::uint64_t identified = 0, mismatched = 0, cor_k3 = 0;
  for (std::uint32_t n = 1; n <= 12; ++n) {
    auto [lib, ref] = group_pair({n});
    for (oracle::Mask m = 1; m <= ref.full(); ++m) {
      const GroupSet s = to_set(lib, m);
      const auto ctx = build_context(s);
      for (std::size_t k = 2; k <= 3; ++k) {
        const oracle::Mask ks = oracle::kfold(ref, m, k);
        const bool critical = oracle::period(ref, ks) == 1 &&
                              oracle::card(ks) == k * oracle::card(m) - k + 1 && !oracle::is_ap(ref, m);
        const Verdict v = verify_critical_pair(ctx, k);
        if (v.hypotheses_met != critical) ++mismatched;
        if (!critical) continue;
        ++identified;
        if (k == 3) ++cor_k3;
        pair.add(v, s);
        decomposition.add(verify_critical_decomposition(ctx, k), s);
        kemperman.add(verify_kemperman_decomposition(ctx, k), s);
      }
    }
  }
  std::ostringstream d;
  d << identified << " critical instances (" << cor_k3 << " with k = 3), " << mismatched
    << " identification mismatches; decomposition: " << decomposition.str() << "; hyper-atom description: "
    << pair.str() << "; minimal-subgroup decomposition: " << kemperman.str();
  return {mismatched == 0 && identified > 0 && decomposition.ok() && pair.ok() && kemperman.ok(), d.str()};
}

Outcome trichotomy() {
  Tally tally;
  std::uint64_t generating = 0;
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for_each_set(make_group({n}), [&](const GroupSet& s) {
      const auto ctx = build_context(s);
      if (ctx.vertex_count() == n) ++generating;
      for (unsigned r = 1; r <= 3; ++r)
        for (unsigned t = 1; t <= r; ++t) tally.add(analyze_signed_sumset(ctx, r, t), s);
    });
  }
  return {tally.ok(), std::to_string(generating) + " generating sets among all; " + tally.str()};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> sweeps = {
      {"sweep", "--group", "Z10", "--k", "2..3"},
      {"sweep", "--group", "Z4xZ4", "--set-source", "random", "--seed", "42", "--count", "400", "--k", "2..4"},
      {"sweep", "--group", "Z12", "--k", "1..4", "--check", "kneser", "--check", "subatom-period", "--hex"},
  };
  std::size_t identical = 0;
  std::size_t bytes = 0;
  for (const auto& base : sweeps) {
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "8", "8", "1"}) {
      auto args = base;
      args.push_back("--jobs");
      args.push_back(jobs);
      std::ostringstream out, err;
      run_command(args, out, err);
      outputs.push_back(out.str());
    }
    bytes += outputs[0].size();
    if (!outputs[0].empty() && outputs[0] == outputs[1] && outputs[1] == outputs[2] && outputs[2] == outputs[3]) {
      ++identical;
    }
  }
  return {identical == sweeps.size(), std::to_string(identical) + "/" + std::to_string(sweeps.size()) +
                                          " sweeps byte-identical across --jobs 1/8 (" + std::to_string(bytes) +
                                          " bytes each run)"};
}

struct Golden {
  std::vector<std::uint32_t> factors;
  std::vector<Element> set;
  std::size_t kappa1;
  std::vector<Element> hyper;
  std::vector<Element> s0;
  std::optional<std::vector<Element>> sub_atom;
  std::size_t doubling;
};

Outcome golden_fixtures() {
  // Values confirmed by full subset enumeration below before being trusted.
  const std::vector<Golden> fixtures = {
      {{12}, {0, 1, 6}, 2, {0, 6}, {1}, std::nullopt, 5},
      {{16}, {0, 1, 8, 9}, 2, {0, 8}, {0, 8}, std::vector<Element>{0, 8}, 6},
      {{16}, {0, 1, 4, 5, 8, 12}, 4, {0, 4, 8, 12}, {1, 5}, std::vector<Element>{0, 4, 8, 12}, 11},
  };
  int matched = 0;
  std::string failure;
  for (const auto& fx : fixtures) {
    auto [lib, ref] = group_pair(fx.factors);
    const GroupSet s = GroupSet::of(lib, std::span<const Element>(fx.set));
    const oracle::Mask m = to_mask(s);
    const auto as_mask = [&](const std::vector<Element>& v) { return to_mask(GroupSet::of(lib, std::span(v))); };

    // Oracle side.
    const auto k1 = oracle::kappa(ref, m, 1);
    const auto h = oracle::hyper_atom(ref, m);
    const auto comps = oracle::components(ref, m, h.value_or(1));
    const auto desert = oracle::desert(ref, m);
    const bool oracle_ok = k1.kappa == fx.kappa1 && h == as_mask(fx.hyper) && comps.front() == as_mask(fx.s0) &&
                           desert.defined == fx.sub_atom.has_value() &&
                           (!desert.defined || desert.sub_atom == as_mask(*fx.sub_atom)) &&
                           oracle::card(oracle::kfold(ref, m, 2)) == fx.doubling;

    // Library side.
    const auto ctx = build_context(s);
    const auto ha = hyper_atom(ctx);
    bool lib_ok = *kappa(ctx, 1).kappa == fx.kappa1 && to_mask(ha.subgroup.members()) == as_mask(fx.hyper) &&
                  to_mask(h_decompose(s, ha.subgroup).smaller()) == as_mask(fx.s0) &&
                  multiple_sumset(s, 2).size() == fx.doubling;
    try {
      const auto seq = desert_sequence(ctx);
      lib_ok = lib_ok && fx.sub_atom && to_mask(seq.sub_atom.members()) == as_mask(*fx.sub_atom);
    } catch (const Error& e) {
      lib_ok = lib_ok && e.code() == ErrorCode::HypothesisNotMet && !fx.sub_atom;
    }
    if (oracle_ok && lib_ok) {
      ++matched;
    } else if (failure.empty()) {
      failure = std::string(" (mismatch on ") + lib.name() + " " + to_json(s).dump() +
                (oracle_ok ? ": library" : ": oracle") + ")";
    }
  }
  return {matched == static_cast<int>(fixtures.size()),
          std::to_string(matched) + "/" + std::to_string(fixtures.size()) +
              " fixtures match oracle and library (kappa_1, H, S0, M, |2S|)" + failure};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Kneser bound", kneser_suite},
      {2, "Cauchy-Davenport cross-check", cauchy_davenport},
      {3, "atom structure", atom_structure},
      {4, "fragment duality", duality},
      {5, "universal period", universal_period},
      {6, "critical pairs", critical_pairs},
      {7, "sS - rS trichotomy", trichotomy},
      {8, "sweep determinism", determinism},
      {9, "golden fixtures", golden_fixtures},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d %-28s %s  %s  [%.1f s]\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds_since(t));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
