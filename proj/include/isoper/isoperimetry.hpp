#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isoper/group_set.hpp"
#include "isoper/kernels.hpp"
#include "isoper/subgroup.hpp"
#include "isoper/verdict.hpp"

namespace isoper {

// Reflexive Cayley graph of a set S, normalized by translating with the
// smallest element a of S and restricting the vertex set to <S - a>.
class CayleyContext {
 public:
  // Throws EmptySet.
  static CayleyContext build(const GroupSet& s);

  const Group& group() const noexcept { return connection_.group(); }
  const Subgroup& vertices() const noexcept { return vertices_; }
  const GroupSet& connection_set() const noexcept { return connection_; }
  const GroupSet& original_set() const noexcept { return original_; }
  Element translate_used() const noexcept { return translate_; }
  bool restricted() const noexcept { return vertices_.order() != group().order(); }
  bool is_reversed() const noexcept { return reversed_; }
  std::size_t vertex_count() const noexcept { return vertices_.order(); }
  // delta = |S'|; every vertex has the same degree.
  std::size_t min_degree() const noexcept { return connection_.size(); }

  // Same vertex set with connection set -S'.
  CayleyContext reversed() const;

  // X + S'. X must lie in the vertex set (GroupMismatch otherwise).
  GroupSet image(const GroupSet& x) const;
  GroupSet boundary(const GroupSet& x) const;
  GroupSet exterior(const GroupSet& x) const;
  // Same operators for the reverse graph, X - S'.
  GroupSet reverse_image(const GroupSet& x) const;
  GroupSet reverse_boundary(const GroupSet& x) const;
  GroupSet reverse_exterior(const GroupSet& x) const;

  // Local vertex numbering: vertex i is the i-th smallest element of V.
  const std::vector<Element>& vertex_list() const noexcept { return vertex_list_; }
  GroupSet from_local(std::uint64_t mask) const;
  // Present when the vertex set has at most 64 elements.
  const std::optional<kernels::LocalGraph>& local_graph() const noexcept { return local_; }

 private:
  CayleyContext(GroupSet original, Element translate, GroupSet connection, Subgroup vertices,
                bool reversed);
  void require_vertices(const GroupSet& x) const;

  GroupSet original_;
  Element translate_ = 0;
  GroupSet connection_;
  Subgroup vertices_;
  bool reversed_ = false;
  std::vector<Element> vertex_list_;
  std::optional<kernels::LocalGraph> local_;
};

inline CayleyContext build_context(const GroupSet& s) { return CayleyContext::build(s); }

struct KappaOptions {
  // Candidate sets examined by the exhaustive search before giving up.
  std::uint64_t candidate_cap = std::uint64_t{1} << 16;
  // Serialized witnesses; counts stay exact.
  std::size_t atom_cap = 4096;
  std::size_t fragment_sample = 64;
  // Scan every admissible size instead of stopping at (|V|-1)/2. Needed to
  // list all fragments rather than just kappa and the atoms.
  bool full_range = false;
};

struct KappaReport {
  std::size_t k = 1;
  bool separable = false;
  std::optional<std::size_t> kappa;
  std::optional<std::size_t> atom_cardinality;
  std::vector<GroupSet> atoms;  // atoms containing 0, canonical order, capped
  std::size_t atom_count = 0;   // exact number of atoms containing 0
  std::vector<GroupSet> fragments_sampled;
  std::size_t fragment_count = 0;  // fragments containing 0 within the scanned sizes
  std::size_t min_degree = 0;
  bool exhaustive = false;
  std::uint64_t candidates_examined = 0;
  // k = 1 only: the minimum of |H + S'| - |H| over proper subgroups H.
  std::optional<std::size_t> subgroup_kappa;
  std::optional<bool> fast_path_agrees;
};

// Exact kappa_k by search over the candidates containing 0, in ascending size.
// k = 1 falls back to the subgroup minimization when the search would exceed
// the cap; k >= 2 throws SearchCapExceeded instead. Non-separable graphs are
// reported with separable = false.
KappaReport kappa(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});

// All k-atoms containing 0, canonical order. Throws NotSeparable.
std::vector<GroupSet> k_atoms(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});

// Every k-fragment containing 0, sorted by (size, mask). Throws
// SearchCapExceeded; an empty list with separable = false when S_k is empty.
struct FragmentList {
  bool separable = false;
  std::size_t kappa = 0;
  std::vector<GroupSet> fragments;
  std::uint64_t examined = 0;
};
FragmentList enumerate_fragments(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});

// kappa_1 restricted to subgroups: min |H + S'| - |H| over subgroups H of V
// with H + S' != V. `atom` is the smallest minimizer, `fragments` every
// minimizer in canonical order.
struct SubgroupKappa {
  bool separable = false;
  std::size_t kappa = 0;
  Subgroup atom;
  std::vector<Subgroup> fragments;
};
SubgroupKappa subgroup_kappa1(const CayleyContext& ctx);

struct Classification {
  bool cauchy = false;
  bool vosper = false;
  // (k, faithful) for each k-separable k up to the requested bound
  std::vector<std::pair<std::size_t, bool>> faithful;
};
Classification classify(const CayleyContext& ctx, std::size_t max_k = 2, const KappaOptions& opts = {});

// Checks the exterior/boundary duality on every k-fragment containing 0 and
// kappa_k(G) == kappa_k(G^-). Throws NotSeparable.
Verdict duality_check(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});

}  // namespace isoper
