#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "isoper/error.hpp"
#include "isoper/serialize.hpp"
#include "isoper/structure.hpp"

namespace isoper {

namespace {

std::size_t critical_size(std::size_t k, std::size_t set_size) { return k * set_size - k + 1; }

GroupSet kfold(const GroupSet& s, std::size_t k) {
  return multiple_sumset(s, static_cast<unsigned>(k));
}

// a = x - b for some x
bool is_reflection(const GroupSet& a, const GroupSet& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const Group& g = a.group();
  const GroupSet neg_b = b.negate();
  const Element a0 = a.min();
  for (Element y : b.elements()) {
    if (neg_b.translate(g.add(a0, y)) == a) return true;
  }
  return false;
}

std::vector<Subgroup> nontrivial_subgroup_fragments(const CayleyContext& ctx) {
  auto sk = subgroup_kappa1(ctx);
  std::vector<Subgroup> out;
  if (!sk.separable) return out;
  for (auto& h : sk.fragments) {
    if (!h.is_trivial()) out.push_back(std::move(h));
  }
  return out;
}

bool closed_subgroup(const GroupSet& a) {
  try {
    Subgroup::from_set(a);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotASubgroup) throw;
    return false;
  }
}

Json cases_json(const std::vector<CriticalCase>& cases) {
  Json arr = Json::array();
  for (auto c : cases) arr.push_back(to_string(c));
  return arr;
}

}  // namespace

Verdict verify_kneser(const CayleyContext& ctx, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::HypothesisNotMet, "k must be at least 1");
  const GroupSet& s = ctx.connection_set();
  const GroupSet ks = kfold(s, k);
  const Subgroup pi = period(ks);
  const std::size_t bound = critical_size(k, s.size());
  Json w{{"k", k}, {"set_size", s.size()}, {"sumset_size", ks.size()}, {"bound", bound},
         {"period", to_json(pi)}};
  if (!pi.is_trivial()) return Verdict::unmet("kneser", std::move(w));
  Verdict v = Verdict::checked("kneser");
  v.witness = std::move(w);
  v.require(ks.size() >= bound, "|kS| >= k|S| - k + 1");
  return v;
}

Verdict verify_subatom_period(const CayleyContext& ctx, std::size_t k, DesertMode mode) {
  const GroupSet& s = ctx.connection_set();
  const GroupSet ks = kfold(s, std::max<std::size_t>(k, 1));
  const std::size_t bound = k * s.size() - std::min(k, k * s.size());
  Json w{{"k", k}, {"sumset_size", ks.size()}, {"bound", bound}, {"mode", to_string(mode)}};
  if (k == 0 || ks.size() > bound) return Verdict::unmet("subatom-period", std::move(w));
  Verdict v = Verdict::checked("subatom-period");
  DesertSequence seq;
  try {
    seq = desert_sequence(ctx, mode);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisNotMet) throw;
    // kappa_1(S) <= |S| - 2 fails only when kS fills its coset of <S - S>,
    // which every subgroup of <S - S> periodizes.
    w["reason"] = "sub-atom undefined";
    v.witness = std::move(w);
    v.vacuous = true;
    v.require(ks.size() == ctx.vertex_count(), "kS is a full coset when the sub-atom is undefined");
    return v;
  }
  w["sub_atom"] = to_json(seq.sub_atom);
  w["length"] = seq.length;
  w["strict_halving_violations"] = seq.strict_halving_violations;
  w["halving_violations"] = seq.halving_violations;
  w["unique_desertic"] = seq.unique_desertic;
  v.witness = std::move(w);
  v.require(is_periodic_under(ks, seq.sub_atom), "kS + M = kS");
  return v;
}

Verdict analyze_signed_sumset(const CayleyContext& ctx, unsigned r, unsigned s) {
  if (s < 1 || r < s) throw Error(ErrorCode::HypothesisNotMet, "need r >= s >= 1");
  const GroupSet& set = ctx.connection_set();
  const std::size_t n = ctx.vertex_count();
  const GroupSet d = signed_sumset(set, s, r);
  const bool ap = is_arithmetic_progression(set);
  const std::size_t bound = std::min(n - 1, (r + s) * set.size());
  const bool large = d.size() >= bound;
  bool periodic = false;
  Json hyper = nullptr;
  if (set.size() < n) {
    const auto ha = hyper_atom(ctx);
    hyper = to_json(ha.subgroup);
    periodic = !ha.subgroup.is_trivial() && is_periodic_under(d, ha.subgroup);
  }
  Json cases = Json::array();
  if (ap) cases.push_back("arithmetic_progression");
  if (large) cases.push_back("large");
  if (periodic) cases.push_back("hyperatom_periodic");
  Verdict v = Verdict::checked("signed-sumset-trichotomy");
  v.witness = Json{{"r", r}, {"s", s}, {"size", d.size()}, {"bound", bound},
                   {"hyper_atom", hyper}, {"cases", cases}};
  v.require(ap || large || periodic, "one of the three cases holds");
  return v;
}

Verdict verify_critical_pair(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  if (k < 2) return Verdict::unmet("critical-pair", Json{{"k", k}});
  const auto rep = analyze_critical_pair(ctx, k, opts);
  Json w{{"k", k}, {"sumset_size", rep.sumset_size}, {"aperiodic", rep.sumset_aperiodic},
         {"set_is_ap", rep.set_is_ap}};
  if (!rep.critical) return Verdict::unmet("critical-pair", std::move(w));
  const auto has = [&](CriticalCase c) {
    return std::find(rep.cases.begin(), rep.cases.end(), c) != rep.cases.end();
  };
  const std::size_t n = ctx.vertex_count();
  Verdict v = Verdict::checked("critical-pair");
  w["two_separable"] = rep.two_separable;
  w["H"] = to_json(*rep.hyper_atom);
  w["S0"] = to_json(*rep.smaller_component);
  w["quotient_set_is_AP"] = rep.quotient_set_is_ap;
  w["case"] = to_string(rep.tag);
  w["cases"] = cases_json(rep.cases);
  v.witness = std::move(w);
  if (!rep.two_separable) {
    v.require(k == 2, "a non-2-separable critical set only occurs for k = 2");
    v.require(rep.doubling_size + 1 == n, "|2S| = |G| - 1 when S is not 2-separable");
    v.require(has(CriticalCase::ComplementPair), "S = x - (G \\ S) when S is not 2-separable");
  } else {
    if (rep.doubling_size + 1 != n) v.require(rep.hyper_atom->order() >= 2, "|H| >= 2");
    v.require(rep.rest_is_periodic, "(S \\ S0) + H = S \\ S0");
    v.require(rep.component_is_critical, "|kS0| = k|S0| - k + 1");
    v.require(rep.quotient_set_is_ap ||
                  (k == 2 && (has(CriticalCase::ComplementPair) || has(CriticalCase::UniqueExpression))),
              "phi(S) is an AP, or k = 2 with a complement pair or a unique expression");
  }
  if (k >= 3) v.require(rep.quotient_set_is_ap, "phi(S) is an AP for k >= 3");
  return v;
}

Verdict verify_critical_decomposition(const CayleyContext& ctx, std::size_t k) {
  const GroupSet& s = ctx.connection_set();
  const GroupSet ks = kfold(s, std::max<std::size_t>(k, 1));
  const bool aperiodic = is_aperiodic(ks);
  const bool tight = ks.size() == critical_size(k, s.size());
  const auto frags = nontrivial_subgroup_fragments(ctx);
  Json w{{"k", k}, {"sumset_size", ks.size()}, {"aperiodic", aperiodic}};
  if (k < 2 || !aperiodic || !tight || frags.empty()) {
    return Verdict::unmet("critical-decomposition", std::move(w));
  }
  Verdict v = Verdict::checked("critical-decomposition");
  Json checked = Json::array();
  for (const auto& h : frags) {
    const auto dec = h_decompose(s, h);
    const GroupSet& s0 = dec.smaller();
    const GroupSet ks0 = kfold(s0, k);
    const GroupSet sh = minkowski_sum(s, h.members());
    Json detail{{"H", to_json(h)}, {"S0", to_json(s0)}};
    v.require(is_aperiodic(ks0), "kS0 is aperiodic", detail);
    v.require(ks0.size() == critical_size(k, s0.size()), "|kS0| = k|S0| - k + 1", detail);
    v.require(is_periodic_under(s - s0, h), "(S \\ S0) + H = S \\ S0", detail);
    v.require(minkowski_sum(ks, h.members()).size() + k * h.order() == k * sh.size() + h.order(),
              "|k(S + H)| = k|S + H| - k|H| + |H|", detail);
    checked.push_back(std::move(detail));
  }
  w["subgroups"] = std::move(checked);
  v.witness = std::move(w);
  return v;
}

Verdict verify_kemperman_decomposition(const CayleyContext& ctx, std::size_t k) {
  const GroupSet& s = ctx.connection_set();
  const GroupSet ks = kfold(s, std::max<std::size_t>(k, 1));
  const bool aperiodic = is_aperiodic(ks);
  Json w{{"k", k}, {"sumset_size", ks.size()}, {"aperiodic", aperiodic}};
  if (k < 2 || !aperiodic || ks.size() != critical_size(k, s.size())) {
    return Verdict::unmet("kemperman-decomposition", std::move(w));
  }
  if (ctx.vertex_count() == 1) {
    // A singleton: any non-zero subgroup leaves S0 = S, an AP.
    Verdict v = Verdict::checked("kemperman-decomposition");
    v.vacuous = true;
    v.witness = std::move(w);
    return v;
  }
  // Non-trivial subgroups H for which S has exactly one partial H-component S0
  // (so (S \ S0) + H = S \ S0) and |k(S+H)| = k|S+H| - k|H| + |H|.
  struct Candidate {
    Subgroup h;
    GroupSet s0;
  };
  std::vector<Candidate> minimal;
  for (const auto& h : enumerate_subgroups_within(ctx.vertices())) {
    if (h.is_trivial()) continue;
    if (!minimal.empty() && h.order() > minimal.front().h.order()) break;
    const auto dec = h_decompose(s, h);
    const GroupSet* partial = nullptr;
    std::size_t partial_count = 0;
    for (const auto& c : dec.components) {
      if (c.size() < h.order()) {
        partial = &c;
        ++partial_count;
      }
    }
    if (partial_count != 1) continue;
    const GroupSet sh = minkowski_sum(s, h.members());
    const std::size_t lhs = minkowski_sum(ks, h.members()).size() + k * h.order();
    if (lhs != k * sh.size() + h.order()) continue;
    minimal.push_back({h, *partial});
  }
  Verdict v = Verdict::checked("kemperman-decomposition");
  v.require(!minimal.empty(), "some non-trivial subgroup splits S");
  Json checked = Json::array();
  for (const auto& [h, s0] : minimal) {
    const GroupSet ks0 = kfold(s0, k);
    auto [q, phi] = quotient(ctx.group(), h);
    const GroupSet phi_s = phi.image(s);
    const GroupSet kphi = kfold(phi_s, k);
    const GroupSet coset_rest = minkowski_sum(s0, h.members()) - s0;
    const bool ap = is_arithmetic_progression(s0);
    const bool reflected = k == 2 && is_reflection(s0, coset_rest);
    Json detail{{"H", to_json(h)}, {"S0", to_json(s0)}, {"S0_is_AP", ap}, {"reflected", reflected}};
    v.require(ks0.size() == critical_size(k, s0.size()), "|kS0| = k|S0| - k + 1", detail);
    v.require(kphi.size() == critical_size(k, phi_s.size()), "|k phi(S)| = k|phi(S)| - k + 1", detail);
    v.require(ap || reflected, "S0 is an AP, or k = 2 and S0 = x - ((S0 + H) \\ S0)", detail);
    checked.push_back(std::move(detail));
  }
  w["subgroups"] = std::move(checked);
  v.witness = std::move(w);
  return v;
}

Verdict verify_fragment_decomposition(const CayleyContext& ctx, std::size_t k) {
  const GroupSet& s = ctx.connection_set();
  const auto frags = nontrivial_subgroup_fragments(ctx);
  Json w{{"k", k}};
  if (k < 2 || frags.empty()) return Verdict::unmet("fragment-decomposition", std::move(w));
  const std::size_t n = ctx.vertex_count();
  const GroupSet ks = kfold(s, k);
  const GroupSet km1 = kfold(s, k - 1);
  const GroupSet diff = signed_sumset(s, 1, 1);
  const bool ks_aperiodic = is_aperiodic(ks);
  Verdict v = Verdict::checked("fragment-decomposition");
  Json checked = Json::array();
  for (const auto& h : frags) {
    const auto dec = h_decompose(s, h);
    Json detail{{"H", to_json(h)}, {"S0", to_json(dec.smaller())}};
    v.require(is_periodic_under(diff, h), "S - S + H = S - S", detail);
    if (dec.components.size() < 2) {
      v.fail(Json{{"clause", "S meets at least two H-cosets"}, {"H", to_json(h)}});
      break;
    }
    const GroupSet& s0 = dec.components[0];
    const GroupSet& s1 = dec.components[1];
    const GroupSet tail = minkowski_sum(s - s0, km1);
    const std::size_t sh = minkowski_sum(s, h.members()).size();
    const std::size_t lower = std::min(n, k * sh - k * h.order());
    v.require(is_periodic_under(tail, h), "(S \\ S0) + (k-1)S is H-periodic", detail);
    v.require(tail.size() >= lower, "|(S \\ S0) + (k-1)S| >= min(|G|, k|S+H| - k|H|)", detail);
    if (!is_periodic_under(ks, h)) {
      v.require(2 * s0.size() <= h.order() && 2 * s1.size() > h.order(), "|S1| > |H|/2 >= |S0|",
                detail);
    }
    if (ks_aperiodic) v.require(is_aperiodic(kfold(s0, k)), "kS0 aperiodic when kS is", detail);
    checked.push_back(std::move(detail));
  }
  w["subgroups"] = std::move(checked);
  v.witness = std::move(w);
  return v;
}

Verdict verify_atom_subgroup(const CayleyContext& ctx, const KappaOptions& opts) {
  const auto rep = kappa(ctx, 1, opts);
  if (!rep.exhaustive || !rep.separable) {
    return Verdict::unmet("atom-subgroup", Json{{"separable", rep.separable}, {"exhaustive", rep.exhaustive}});
  }
  Verdict v = Verdict::checked("atom-subgroup");
  const std::size_t n = ctx.vertex_count();
  for (const auto& a : rep.atoms) {
    Json detail{{"atom", to_json(a)}};
    v.require(closed_subgroup(a), "the 1-atom containing 0 is a subgroup", detail);
    v.require(*rep.kappa % a.size() == 0, "|H| divides kappa_1", detail);
  }
  Json faithful = Json::array();
  for (std::size_t k = 1; k <= 3; ++k) {
    if (!is_k_separable(ctx, k, opts)) break;
    const auto rk = k == 1 ? rep : kappa(ctx, k, opts);
    const std::size_t a = *rk.atom_cardinality;
    const bool ok = a + a + *rk.kappa <= n;
    faithful.push_back(Json{{"k", k}, {"faithful", ok}});
    v.require(ok, "a k-separable abelian Cayley graph is k-faithful", Json{{"k", k}});
  }
  v.witness = Json{{"kappa", *rep.kappa}, {"atom", to_json(rep.atoms.front())}, {"faithful", faithful}};
  return v;
}

Verdict verify_two_atom_subgroup(const CayleyContext& ctx, const KappaOptions& opts) {
  const auto rep = kappa(ctx, 2, opts);
  const std::size_t size = ctx.connection_set().size();
  if (!rep.separable || *rep.kappa + 1 > size) {
    return Verdict::unmet("two-atom-subgroup",
                          Json{{"separable", rep.separable}, {"kappa", rep.kappa ? Json(*rep.kappa) : Json()}});
  }
  Verdict v = Verdict::checked("two-atom-subgroup");
  v.witness = Json{{"kappa", *rep.kappa}, {"atom_cardinality", *rep.atom_cardinality}, {"atom_count", rep.atom_count}};
  if (*rep.atom_cardinality < 3) {
    v.vacuous = true;
    return v;
  }
  for (const auto& a : rep.atoms) {
    v.require(closed_subgroup(a), "a 2-atom with at least 3 elements is a subgroup", Json{{"atom", to_json(a)}});
  }
  return v;
}

Verdict verify_subgroup_two_fragment(const CayleyContext& ctx, const KappaOptions& opts) {
  const GroupSet& s = ctx.connection_set();
  const std::size_t n = ctx.vertex_count();
  Json w{{"set_size", s.size()}, {"vertices", n}};
  if (2 * s.size() > n + 1 || is_arithmetic_progression(s) || !is_k_separable(ctx, 2, opts)) {
    return Verdict::unmet("subgroup-two-fragment", std::move(w));
  }
  const auto rep = kappa(ctx, 2, opts);
  w["kappa"] = *rep.kappa;
  if (*rep.kappa + 1 > s.size()) return Verdict::unmet("subgroup-two-fragment", std::move(w));
  Verdict v = Verdict::checked("subgroup-two-fragment");
  std::optional<Subgroup> found;
  for (const auto& h : enumerate_subgroups_within(ctx.vertices())) {
    if (h.order() < 2) continue;
    const std::size_t img = minkowski_sum(h.members(), s).size();
    if (img + 2 <= n && img - h.order() == *rep.kappa) {
      found = h;
      break;
    }
  }
  w["subgroup"] = found ? to_json(*found) : Json();
  v.witness = std::move(w);
  v.require(found.has_value(), "some subgroup is a 2-fragment");
  return v;
}

Verdict verify_hyperatom_quotient(const CayleyContext& ctx, const KappaOptions& opts) {
  const GroupSet& s = ctx.connection_set();
  const std::size_t n = ctx.vertex_count();
  Json w{{"set_size", s.size()}, {"vertices", n}};
  if (2 * s.size() > n + 1 || !is_k_separable(ctx, 2, opts)) {
    return Verdict::unmet("hyperatom-quotient", std::move(w));
  }
  const auto rep = kappa(ctx, 2, opts);
  w["kappa"] = *rep.kappa;
  if (*rep.kappa + 1 > s.size()) return Verdict::unmet("hyperatom-quotient", std::move(w));
  const auto ha = hyper_atom(ctx);
  auto [q, phi] = quotient(ctx.group(), ha.subgroup);
  const GroupSet phi_s = phi.image(s);
  const bool ap = is_arithmetic_progression(phi_s);
  const bool vosper = ap ? false : is_vosper(phi_s, opts);
  w["hyper_atom"] = to_json(ha.subgroup);
  w["quotient_set"] = to_json(phi_s);
  w["quotient_is_AP"] = ap;
  w["quotient_is_vosper"] = vosper;
  Verdict v = Verdict::checked("hyperatom-quotient");
  v.witness = std::move(w);
  v.require(ap || vosper, "phi(S) is an AP or a Vosper subset");
  return v;
}

std::vector<Verdict> verify_structure_theorems(const CayleyContext& ctx, const KappaOptions& opts) {
  return {verify_atom_subgroup(ctx, opts), verify_two_atom_subgroup(ctx, opts),
          verify_subgroup_two_fragment(ctx, opts), verify_hyperatom_quotient(ctx, opts)};
}

Verdict verify_atom_intersection(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  KappaOptions o = opts;
  o.atom_cap = SIZE_MAX;
  const auto rep = kappa(ctx, k, o);
  if (!rep.separable) return Verdict::unmet("atom-intersection", Json{{"k", k}});
  const std::size_t n = ctx.vertex_count();
  const std::size_t a = *rep.atom_cardinality;
  const bool faithful = 2 * a + *rep.kappa <= n;
  const auto rev = kappa(ctx.reversed(), k, o);
  const bool rev_faithful = rev.separable && 2 * *rev.atom_cardinality + *rev.kappa <= n;
  Verdict v = Verdict::checked("atom-intersection");
  v.require(faithful || rev_faithful, "k-faithful or reverse k-faithful");
  std::size_t total = 0;
  if (faithful) {
    std::vector<GroupSet> all;
    std::unordered_set<BitMask> seen;
    for (const auto& atom : rep.atoms) {
      for (Element x : ctx.vertex_list()) {
        GroupSet t = atom.translate(x);
        if (seen.insert(t.mask()).second) all.push_back(std::move(t));
      }
    }
    total = all.size();
    for (std::size_t i = 0; i < all.size() && v.holds; ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if ((all[i] & all[j]).size() >= k) {
          v.fail(Json{{"clause", "distinct k-atoms meet in fewer than k elements"},
                      {"first", to_json(all[i])},
                      {"second", to_json(all[j])}});
          break;
        }
      }
    }
  } else {
    v.vacuous = true;
  }
  v.witness = Json{{"k", k}, {"kappa", *rep.kappa}, {"atom_cardinality", a}, {"faithful", faithful},
                   {"atoms_total", total}};
  return v;
}

Verdict verify_kappa_monotone(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  if (k < 2) return Verdict::unmet("kappa-monotone", Json{{"k", k}});
  const auto rk = kappa(ctx, k, opts);
  if (!rk.separable) return Verdict::unmet("kappa-monotone", Json{{"k", k}});
  const auto rprev = kappa(ctx, k - 1, opts);
  Verdict v = Verdict::checked("kappa-monotone");
  v.witness = Json{{"k", k}, {"kappa", *rk.kappa}, {"previous", rprev.kappa ? Json(*rprev.kappa) : Json()}};
  v.require(rprev.separable, "k-separable implies (k-1)-separable");
  if (rprev.separable) v.require(*rprev.kappa <= *rk.kappa, "kappa_{k-1} <= kappa_k");
  return v;
}

Verdict verify_atom_degree(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  KappaOptions o = opts;
  o.atom_cap = SIZE_MAX;
  const auto rep = kappa(ctx, k, o);
  if (!rep.separable) return Verdict::unmet("atom-degree", Json{{"k", k}});
  Verdict v = Verdict::checked("atom-degree");
  v.witness = Json{{"k", k}, {"atom_cardinality", *rep.atom_cardinality}};
  if (*rep.atom_cardinality <= k) {
    v.vacuous = true;
    return v;
  }
  const Group& g = ctx.group();
  for (const auto& a : rep.atoms) {
    for (Element x : a.elements()) {
      const GroupSet in = ctx.reverse_image(GroupSet::singleton(g, x)) & a;
      v.require(!(in == GroupSet::singleton(g, x)), "every atom vertex has an in-neighbour inside the atom",
                Json{{"atom", to_json(a)}, {"vertex", x}});
    }
  }
  return v;
}

Verdict verify_fragment_duality(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  if (k == 0 || !is_k_separable(ctx, k, opts)) return Verdict::unmet("fragment-duality", Json{{"k", k}});
  return duality_check(ctx, k, opts);
}

namespace {

using CheckFn = std::function<Verdict(const CayleyContext&, const CheckParams&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"kneser", [](const auto& c, const auto& p) { return verify_kneser(c, p.k); }},
      {"subatom-period", [](const auto& c, const auto& p) { return verify_subatom_period(c, p.k, p.mode); }},
      {"signed-sumset-trichotomy", [](const auto& c, const auto& p) { return analyze_signed_sumset(c, p.r, p.s); }},
      {"critical-pair", [](const auto& c, const auto& p) { return verify_critical_pair(c, p.k, p.kappa); }},
      {"critical-decomposition", [](const auto& c, const auto& p) { return verify_critical_decomposition(c, p.k); }},
      {"kemperman-decomposition", [](const auto& c, const auto& p) { return verify_kemperman_decomposition(c, p.k); }},
      {"fragment-decomposition", [](const auto& c, const auto& p) { return verify_fragment_decomposition(c, p.k); }},
      {"atom-subgroup", [](const auto& c, const auto& p) { return verify_atom_subgroup(c, p.kappa); }},
      {"two-atom-subgroup", [](const auto& c, const auto& p) { return verify_two_atom_subgroup(c, p.kappa); }},
      {"subgroup-two-fragment", [](const auto& c, const auto& p) { return verify_subgroup_two_fragment(c, p.kappa); }},
      {"hyperatom-quotient", [](const auto& c, const auto& p) { return verify_hyperatom_quotient(c, p.kappa); }},
      {"atom-intersection", [](const auto& c, const auto& p) { return verify_atom_intersection(c, p.k, p.kappa); }},
      {"kappa-monotone", [](const auto& c, const auto& p) { return verify_kappa_monotone(c, p.k, p.kappa); }},
      {"atom-degree", [](const auto& c, const auto& p) { return verify_atom_degree(c, p.k, p.kappa); }},
      {"fragment-duality", [](const auto& c, const auto& p) { return verify_fragment_duality(c, p.k, p.kappa); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_check_id(const std::string& id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Verdict run_check(const std::string& id, const CayleyContext& ctx, const CheckParams& params) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return fn(ctx, params);
  }
  throw Error(ErrorCode::ParseError, "unknown check '" + id + "'");
}

}  // namespace isoper
