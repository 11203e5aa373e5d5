#include "isoper/structure.hpp"

#include <algorithm>

#include "isoper/error.hpp"

namespace isoper {

const char* to_string(DesertMode mode) {
  return mode == DesertMode::Atom ? "atom" : "hyperatom";
}

const char* to_string(CriticalCase c) {
  switch (c) {
    case CriticalCase::ArithmeticProgression: return "arithmetic_progression";
    case CriticalCase::ComplementPair: return "complement_pair";
    case CriticalCase::UniqueExpression: return "unique_expression";
    case CriticalCase::VosperQuotient: return "vosper_quotient";
    case CriticalCase::SubatomPeriodic: return "subatom_periodic";
    case CriticalCase::NotCritical: return "not_critical";
    case CriticalCase::Unclassified: return "unclassified";
  }
  return "unknown";
}

HyperAtom hyper_atom(const CayleyContext& ctx) {
  auto sk = subgroup_kappa1(ctx);
  if (!sk.separable) throw Error(ErrorCode::NotSeparable, "graph is not 1-separable; no hyper-atom");
  HyperAtom out;
  out.kappa1 = sk.kappa;
  std::size_t best = 0;
  for (const auto& h : sk.fragments) best = std::max(best, h.order());
  for (auto& h : sk.fragments) {
    if (h.order() == best) out.maximal.push_back(std::move(h));
  }
  out.subgroup = out.maximal.front();
  return out;
}

bool is_k_separable(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  const std::size_t n = ctx.vertex_count();
  if (n < 2 * k + 1) return false;
  // Cheap witnesses first: S itself and the subgroups of V.
  const GroupSet& s = ctx.connection_set();
  if (s.size() >= k && ctx.image(s).size() + k <= n) return true;
  if (k == 1) return s.size() < n;
  return kappa(ctx, k, opts).separable;
}

bool is_vosper(const GroupSet& s, const KappaOptions& opts) {
  const auto ctx = build_context(s);
  const auto rep = kappa(ctx, 2, opts);
  return !rep.separable || *rep.kappa >= s.size();
}

bool is_complement_pair(const CayleyContext& ctx) {
  const GroupSet& s = ctx.connection_set();
  const GroupSet t = ctx.vertices().members() - s;
  if (t.size() != s.size() || t.empty()) return false;
  const Group& g = ctx.group();
  const GroupSet neg_t = t.negate();
  const Element s0 = s.min();
  for (Element y : t.elements()) {
    if (neg_t.translate(g.add(s0, y)) == s) return true;
  }
  return false;
}

namespace {

Subgroup fragment_subgroup(const CayleyContext& ctx, DesertMode mode) {
  const auto sk = subgroup_kappa1(ctx);
  if (!sk.separable) return Subgroup::trivial(ctx.group());
  if (mode == DesertMode::Atom) return sk.atom;
  return hyper_atom(ctx).subgroup;
}

}  // namespace

DesertSequence desert_sequence(const CayleyContext& ctx, DesertMode mode) {
  const auto sk = subgroup_kappa1(ctx);
  const std::size_t size = ctx.connection_set().size();
  if (!sk.separable || sk.kappa + 2 > size) {
    throw Error(ErrorCode::HypothesisNotMet, "desert sequence needs kappa_1(S) <= |S| - 2");
  }
  DesertSequence out;
  out.mode = mode;
  GroupSet a = ctx.connection_set();
  while (true) {
    const auto step_ctx = build_context(a);
    Subgroup h = fragment_subgroup(step_ctx, mode);
    out.steps.push_back({a, h});
    if (h.is_trivial()) break;
    const auto dec = h_decompose(a, h);
    std::vector<const GroupSet*> desertic;
    for (const auto& c : dec.components) {
      if (2 * c.size() <= h.order()) desertic.push_back(&c);
    }
    if (desertic.empty()) break;
    if (desertic.size() > 1) out.unique_desertic = false;
    const GroupSet& next = *desertic.front();
    a = next.translate(a.group().neg(next.min()));
  }
  out.length = out.steps.size() - 1;
  const Subgroup& last = out.steps.back().fragment_subgroup;
  out.sub_atom = !last.is_trivial() || out.length == 0 ? last : out.steps[out.length - 1].fragment_subgroup;
  for (std::size_t i = 1; i < out.steps.size(); ++i) {
    const std::size_t prev = out.steps[i - 1].fragment_subgroup.order();
    const std::size_t cur = out.steps[i].fragment_subgroup.order();
    if (2 * cur >= prev) out.strict_halving_violations.push_back(i);
    if (2 * cur > prev) out.halving_violations.push_back(i);
  }
  return out;
}

CriticalPairReport analyze_critical_pair(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  if (k < 2) throw Error(ErrorCode::HypothesisNotMet, "critical pair analysis needs k >= 2");
  CriticalPairReport rep;
  rep.k = k;
  const GroupSet& s = ctx.connection_set();
  const Group& g = ctx.group();
  const GroupSet ks = multiple_sumset(s, static_cast<unsigned>(k));
  rep.set_size = s.size();
  rep.sumset_size = ks.size();
  rep.sumset_aperiodic = is_aperiodic(ks);
  rep.set_is_ap = is_arithmetic_progression(s);
  rep.critical = rep.sumset_aperiodic && rep.sumset_size + k == k * s.size() + 1 && !rep.set_is_ap;

  if (!rep.critical) {
    rep.tag = CriticalCase::NotCritical;
    if (rep.sumset_size + k <= k * s.size()) {
      try {
        const auto seq = desert_sequence(ctx);
        if (is_periodic_under(ks, seq.sub_atom)) rep.cases.push_back(CriticalCase::SubatomPeriodic);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisNotMet) throw;
      }
    }
    return rep;
  }

  rep.two_separable = is_k_separable(ctx, 2, opts);
  rep.doubling_size = multiple_sumset(s, 2).size();
  const auto ha = hyper_atom(ctx);
  const Subgroup& h = ha.subgroup;
  rep.hyper_atom = h;
  const auto dec = h_decompose(s, h);
  const GroupSet& s0 = dec.smaller();
  rep.smaller_component = s0;
  const GroupSet rest = s - s0;
  rep.rest_is_periodic = is_periodic_under(rest, h);
  rep.component_is_critical =
      multiple_sumset(s0, static_cast<unsigned>(k)).size() + k == k * s0.size() + 1;

  auto [q, phi] = quotient(g, h);
  const GroupSet phi_s = phi.image(s);
  const GroupSet phi_s0 = phi.image(s0);
  rep.quotient_set_is_ap = is_arithmetic_progression(phi_s);
  const bool complement = is_complement_pair(ctx);
  const GroupSet left = minkowski_sum(phi_s, phi_s0.negate());
  const GroupSet right = minkowski_sum(phi_s0, phi_s.negate());
  const bool unique = (left & right) == GroupSet::singleton(q, 0);
  try {
    rep.quotient_is_vosper = is_vosper(phi_s, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchCapExceeded) throw;
  }

  if (rep.quotient_set_is_ap) rep.cases.push_back(CriticalCase::ArithmeticProgression);
  if (complement) rep.cases.push_back(CriticalCase::ComplementPair);
  if (unique) rep.cases.push_back(CriticalCase::UniqueExpression);
  if (rep.quotient_is_vosper.value_or(false)) rep.cases.push_back(CriticalCase::VosperQuotient);
  rep.tag = rep.cases.empty() ? CriticalCase::Unclassified : rep.cases.front();
  return rep;
}

}  // namespace isoper
