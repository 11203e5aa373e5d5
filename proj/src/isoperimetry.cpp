#include "isoper/isoperimetry.hpp"

#include <algorithm>
#include <limits>

#include "isoper/error.hpp"
#include "isoper/serialize.hpp"
#include "isoper/setops.hpp"

namespace isoper {

namespace {

constexpr std::size_t kMaxLocalVertices = 64;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

void require_k(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::HypothesisNotMet, "k must be at least 1");
}

// Exhaustive scan over candidates containing 0. Only the strata whose minimum
// equals the overall minimum are kept.
struct Search {
  bool separable = false;
  std::size_t kappa = 0;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> strata;
  std::uint64_t examined = 0;
};

std::size_t highest_size(std::size_t n, std::size_t k, bool full_range) {
  // |X| + |boundary| <= n - k and the boundary of a proper subset of a
  // connected graph is non-empty. Without full_range, atoms are known to
  // satisfy |A| <= |exterior(A)|, hence |A| <= (n - 1) / 2.
  if (n < k + 1) return 0;
  std::size_t hi = n - k - 1;
  if (!full_range) hi = std::min(hi, (n - 1) / 2);
  return hi;
}

std::uint64_t planned_candidates(std::size_t n, std::size_t k, bool full_range) {
  std::uint64_t total = 0;
  const std::size_t hi = highest_size(n, k, full_range);
  for (std::size_t m = k; m <= hi; ++m) total = saturating_add(total, kernels::stratum_size(n, m));
  return total;
}

bool search_feasible(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts, bool full_range) {
  return ctx.local_graph().has_value() &&
         planned_candidates(ctx.vertex_count(), k, full_range) <= opts.candidate_cap;
}

Search run_search(const CayleyContext& ctx, std::size_t k, bool full_range) {
  Search out;
  const auto& graph = *ctx.local_graph();
  const std::size_t n = graph.n;
  if (n < 2 * k + 1) return out;
  const std::size_t hi = highest_size(n, k, full_range);
  for (std::size_t m = k; m <= hi; ++m) {
    auto res = kernels::scan_stratum(graph, m, k);
    out.examined += res.examined;
    if (!res.any) continue;
    if (!out.separable || res.min_boundary < out.kappa) {
      out.separable = true;
      out.kappa = res.min_boundary;
      out.strata.clear();
    }
    if (res.min_boundary == out.kappa) out.strata.emplace_back(m, std::move(res.achievers));
  }
  return out;
}

}  // namespace

CayleyContext::CayleyContext(GroupSet original, Element translate, GroupSet connection,
                             Subgroup vertices, bool reversed)
    : original_(std::move(original)),
      translate_(translate),
      connection_(std::move(connection)),
      vertices_(std::move(vertices)),
      reversed_(reversed),
      vertex_list_(vertices_.members().elements()) {
  const std::size_t n = vertex_list_.size();
  if (n > kMaxLocalVertices) return;
  const Group& g = group();
  std::vector<std::uint32_t> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[vertex_list_[i]] = static_cast<std::uint32_t>(i);
  kernels::LocalGraph lg;
  lg.n = n;
  lg.nbr.assign(n, 0);
  const auto conn = connection_.elements();
  for (std::size_t i = 0; i < n; ++i) {
    for (Element s : conn) lg.nbr[i] |= std::uint64_t{1} << local[g.add(vertex_list_[i], s)];
  }
  local_ = std::move(lg);
}

CayleyContext CayleyContext::build(const GroupSet& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "Cayley graph of the empty set");
  const Element a = s.min();
  GroupSet conn = s.translate(s.group().neg(a));
  Subgroup v = generated_subgroup(conn);
  return CayleyContext(s, a, std::move(conn), std::move(v), false);
}

CayleyContext CayleyContext::reversed() const {
  return CayleyContext(original_, translate_, connection_.negate(), vertices_, !reversed_);
}

void CayleyContext::require_vertices(const GroupSet& x) const {
  require_same_group(x, connection_);
  if (!x.is_subset_of(vertices_.members())) {
    throw Error(ErrorCode::GroupMismatch, "set is not contained in the vertex set of the graph");
  }
}

GroupSet CayleyContext::image(const GroupSet& x) const {
  require_vertices(x);
  return minkowski_sum(x, connection_);
}

GroupSet CayleyContext::boundary(const GroupSet& x) const { return image(x) - x; }

GroupSet CayleyContext::exterior(const GroupSet& x) const { return vertices_.members() - image(x); }

GroupSet CayleyContext::reverse_image(const GroupSet& x) const {
  require_vertices(x);
  return minkowski_sum(x, connection_.negate());
}

GroupSet CayleyContext::reverse_boundary(const GroupSet& x) const { return reverse_image(x) - x; }

GroupSet CayleyContext::reverse_exterior(const GroupSet& x) const {
  return vertices_.members() - reverse_image(x);
}

GroupSet CayleyContext::from_local(std::uint64_t mask) const {
  GroupSet out(group());
  for (; mask != 0; mask &= mask - 1) {
    out.insert(vertex_list_[static_cast<std::size_t>(std::countr_zero(mask))]);
  }
  return out;
}

SubgroupKappa subgroup_kappa1(const CayleyContext& ctx) {
  SubgroupKappa out;
  const std::size_t n = ctx.vertex_count();
  for (auto& h : enumerate_subgroups_within(ctx.vertices())) {
    const std::size_t img = minkowski_sum(h.members(), ctx.connection_set()).size();
    if (img >= n) continue;
    const std::size_t b = img - h.order();
    if (!out.separable || b < out.kappa) {
      out.separable = true;
      out.kappa = b;
      out.fragments.clear();
    }
    if (b == out.kappa) out.fragments.push_back(std::move(h));
  }
  if (out.separable) out.atom = out.fragments.front();
  return out;
}

KappaReport kappa(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  require_k(k);
  KappaReport rep;
  rep.k = k;
  rep.min_degree = ctx.min_degree();

  std::optional<SubgroupKappa> fast;
  if (k == 1) {
    fast = subgroup_kappa1(ctx);
    if (fast->separable) rep.subgroup_kappa = fast->kappa;
  }

  if (!search_feasible(ctx, k, opts, false)) {
    if (k != 1) {
      throw Error(ErrorCode::SearchCapExceeded,
                  "exhaustive search for k=" + std::to_string(k) + " over " +
                      std::to_string(ctx.vertex_count()) + " vertices exceeds the candidate cap");
    }
    rep.exhaustive = false;
    rep.separable = fast->separable;
    if (rep.separable) {
      rep.kappa = fast->kappa;
      rep.atom_cardinality = fast->atom.order();
      rep.atoms.push_back(fast->atom.members());
      rep.atom_count = 1;
      for (const auto& h : fast->fragments) {
        if (rep.fragments_sampled.size() < opts.fragment_sample) rep.fragments_sampled.push_back(h.members());
      }
      rep.fragment_count = fast->fragments.size();
    }
    return rep;
  }

  const Search s = run_search(ctx, k, opts.full_range);
  rep.exhaustive = true;
  rep.candidates_examined = s.examined;
  rep.separable = s.separable;
  if (s.separable) {
    rep.kappa = s.kappa;
    const auto& [atom_size, atoms] = s.strata.front();
    rep.atom_cardinality = atom_size;
    rep.atom_count = atoms.size();
    for (std::size_t i = 0; i < atoms.size() && i < opts.atom_cap; ++i) {
      rep.atoms.push_back(ctx.from_local(atoms[i]));
    }
    for (const auto& [m, masks] : s.strata) {
      rep.fragment_count += masks.size();
      for (std::uint64_t mask : masks) {
        if (rep.fragments_sampled.size() >= opts.fragment_sample) break;
        rep.fragments_sampled.push_back(ctx.from_local(mask));
      }
    }
  }
  if (fast) {
    rep.fast_path_agrees = fast->separable == rep.separable &&
                           (!rep.separable || fast->kappa == *rep.kappa);
  }
  return rep;
}

std::vector<GroupSet> k_atoms(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  KappaOptions o = opts;
  o.atom_cap = std::numeric_limits<std::size_t>::max();
  auto rep = kappa(ctx, k, o);
  if (!rep.separable) {
    throw Error(ErrorCode::NotSeparable, "graph is not " + std::to_string(k) + "-separable");
  }
  return std::move(rep.atoms);
}

FragmentList enumerate_fragments(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  require_k(k);
  if (!search_feasible(ctx, k, opts, true)) {
    throw Error(ErrorCode::SearchCapExceeded, "fragment enumeration exceeds the candidate cap");
  }
  const Search s = run_search(ctx, k, true);
  FragmentList out;
  out.separable = s.separable;
  out.kappa = s.kappa;
  out.examined = s.examined;
  for (const auto& [m, masks] : s.strata) {
    for (std::uint64_t mask : masks) out.fragments.push_back(ctx.from_local(mask));
  }
  return out;
}

Classification classify(const CayleyContext& ctx, std::size_t max_k, const KappaOptions& opts) {
  Classification out;
  const std::size_t n = ctx.vertex_count();
  for (std::size_t k = 1; k <= std::max<std::size_t>(max_k, 2); ++k) {
    const auto rep = kappa(ctx, k, opts);
    if (k == 1) out.cauchy = !rep.separable || *rep.kappa + 1 == ctx.min_degree();
    if (k == 2) out.vosper = !rep.separable || *rep.kappa >= ctx.min_degree();
    if (rep.separable && k <= max_k) {
      const std::size_t a = *rep.atom_cardinality;
      out.faithful.emplace_back(k, a <= n - a - *rep.kappa);
    }
  }
  return out;
}

Verdict duality_check(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts) {
  const auto frags = enumerate_fragments(ctx, k, opts);
  if (!frags.separable) {
    throw Error(ErrorCode::NotSeparable, "graph is not " + std::to_string(k) + "-separable");
  }
  Verdict v = Verdict::checked("fragment-duality");
  const std::size_t n = ctx.vertex_count();
  for (const auto& x : frags.fragments) {
    const GroupSet ext = ctx.exterior(x);
    const GroupSet bd = ctx.boundary(x);
    const GroupSet rev_bd = ctx.reverse_boundary(ext);
    Json detail{{"fragment", to_json(x)}, {"exterior", to_json(ext)}};
    v.require(rev_bd == bd, "reverse boundary of exterior equals boundary", detail);
    v.require(ctx.reverse_exterior(ext) == x, "reverse exterior of exterior is the fragment", detail);
    v.require(ext.size() >= k && ctx.reverse_image(ext).size() + k <= n && rev_bd.size() == frags.kappa,
              "exterior is a reverse fragment", detail);
  }
  const auto rev = kappa(ctx.reversed(), k, opts);
  v.require(rev.separable && *rev.kappa == frags.kappa, "kappa equals reverse kappa",
            Json{{"kappa", frags.kappa}, {"reverse_kappa", rev.kappa ? Json(*rev.kappa) : Json()}});
  v.witness = Json{{"k", k},
                   {"kappa", frags.kappa},
                   {"reverse_kappa", rev.kappa ? Json(*rev.kappa) : Json()},
                   {"fragments_checked", frags.fragments.size()}};
  return v;
}

}  // namespace isoper
