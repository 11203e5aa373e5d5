#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoper/isoperimetry.hpp"
#include "isoper/setops.hpp"
#include "isoper/verdict.hpp"

namespace isoper {

// Maximum-order subgroup H of V with |H + S'| - |H| = kappa_1 and
// H + S' != V. Ties go to the canonical first; `maximal` lists every
// co-maximal winner. Throws NotSeparable.
struct HyperAtom {
  std::size_t kappa1 = 0;
  Subgroup subgroup;
  std::vector<Subgroup> maximal;
};
HyperAtom hyper_atom(const CayleyContext& ctx);

// Which subgroup fragment drives each step of a desert sequence.
enum class DesertMode { Atom, HyperAtom };
const char* to_string(DesertMode mode);

struct DesertStep {
  GroupSet set;               // A_i, translated to contain 0
  Subgroup fragment_subgroup;  // H_i, trivial when A_i has none
};

struct DesertSequence {
  DesertMode mode = DesertMode::Atom;
  std::vector<DesertStep> steps;  // A_0 .. A_length
  std::size_t length = 0;
  Subgroup sub_atom;
  // Steps i >= 1 where 2|H_i| >= |H_{i-1}| (strict halving fails) and where
  // 2|H_i| > |H_{i-1}| (even the non-strict form fails).
  std::vector<std::size_t> strict_halving_violations;
  std::vector<std::size_t> halving_violations;
  bool unique_desertic = true;
};

// Requires kappa_1(S) <= |S| - 2; throws HypothesisNotMet otherwise.
DesertSequence desert_sequence(const CayleyContext& ctx, DesertMode mode = DesertMode::Atom);

enum class CriticalCase {
  ArithmeticProgression,
  ComplementPair,
  UniqueExpression,
  VosperQuotient,
  SubatomPeriodic,
  NotCritical,
  Unclassified,
};
const char* to_string(CriticalCase c);

struct CriticalPairReport {
  std::size_t k = 2;
  std::size_t set_size = 0;
  std::size_t sumset_size = 0;
  bool sumset_aperiodic = false;
  bool set_is_ap = false;
  bool critical = false;
  // Filled for critical instances only.
  bool two_separable = false;
  std::optional<Subgroup> hyper_atom;
  std::optional<GroupSet> smaller_component;
  std::size_t doubling_size = 0;  // |2S|
  bool quotient_set_is_ap = false;
  bool rest_is_periodic = false;        // (S \ S0) + H = S \ S0
  bool component_is_critical = false;   // |kS0| = k|S0| - k + 1
  std::optional<bool> quotient_is_vosper;  // absent when the search cap is hit
  std::vector<CriticalCase> cases;
  CriticalCase tag = CriticalCase::NotCritical;
};

CriticalPairReport analyze_critical_pair(const CayleyContext& ctx, std::size_t k,
                                         const KappaOptions& opts = {});

// ---- verifiers -------------------------------------------------------------

struct CheckParams {
  std::size_t k = 2;
  unsigned r = 1;
  unsigned s = 1;
  DesertMode mode = DesertMode::Atom;
  KappaOptions kappa;
};

// |kS| >= k|S| - k + 1 whenever kS is aperiodic.
Verdict verify_kneser(const CayleyContext& ctx, std::size_t k);
// kS + M = kS whenever |kS| <= k|S| - k, M the sub-atom.
Verdict verify_subatom_period(const CayleyContext& ctx, std::size_t k, DesertMode mode = DesertMode::Atom);
// For r >= s >= 1: S is an AP, or |sS - rS| >= min(|V| - 1, (r + s)|S|), or
// the hyper-atom is non-trivial and periodizes sS - rS. Throws
// HypothesisNotMet when s < 1 or r < s.
Verdict analyze_signed_sumset(const CayleyContext& ctx, unsigned r, unsigned s);
// Critical-pair description through the hyper-atom quotient.
Verdict verify_critical_pair(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});
// Decomposition of a critical kS modulo every non-trivial subgroup fragment.
Verdict verify_critical_decomposition(const CayleyContext& ctx, std::size_t k);
// Decomposition modulo the smallest subgroup splitting off a periodic part.
Verdict verify_kemperman_decomposition(const CayleyContext& ctx, std::size_t k);
// Periodicity facts for every non-trivial subgroup fragment.
Verdict verify_fragment_decomposition(const CayleyContext& ctx, std::size_t k);

// Atom/fragment structure: 1-atoms are subgroups, large 2-atoms are
// subgroups, a subgroup 2-fragment exists, the hyper-atom quotient is an AP
// or Vosper.
std::vector<Verdict> verify_structure_theorems(const CayleyContext& ctx, const KappaOptions& opts = {});
Verdict verify_atom_subgroup(const CayleyContext& ctx, const KappaOptions& opts = {});
Verdict verify_two_atom_subgroup(const CayleyContext& ctx, const KappaOptions& opts = {});
Verdict verify_subgroup_two_fragment(const CayleyContext& ctx, const KappaOptions& opts = {});
Verdict verify_hyperatom_quotient(const CayleyContext& ctx, const KappaOptions& opts = {});

Verdict verify_atom_intersection(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});
Verdict verify_kappa_monotone(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});
Verdict verify_atom_degree(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});
// duality_check wrapped so non-separable graphs yield an unmet verdict.
Verdict verify_fragment_duality(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});

// Stable ids accepted by the CLI and written to sweep logs.
const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);
Verdict run_check(const std::string& id, const CayleyContext& ctx, const CheckParams& params);

// Helpers shared by the verifiers.
bool is_k_separable(const CayleyContext& ctx, std::size_t k, const KappaOptions& opts = {});
// S is a Vosper subset: not 2-separable or kappa_2 >= |S|.
bool is_vosper(const GroupSet& s, const KappaOptions& opts = {});
// S = x - (V \ S) for some x, V the vertex set of ctx.
bool is_complement_pair(const CayleyContext& ctx);

}  // namespace isoper
