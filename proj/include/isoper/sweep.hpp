#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "isoper/parse.hpp"
#include "isoper/structure.hpp"

namespace isoper {

enum class SetSource { Exhaustive, Random };

struct SweepConfig {
  std::string group_spec;
  KRange k_range{2, 2};
  SetSource source = SetSource::Exhaustive;
  std::uint64_t count = 0;            // random mode
  std::optional<std::uint64_t> seed;  // random mode, required
  std::vector<std::string> checks;    // empty = every check id
  std::string output_path;            // empty = the given stream
  unsigned jobs = 1;
  unsigned r = 1;
  unsigned s = 1;
  DesertMode mode = DesertMode::Atom;
  bool hex = false;
};

inline constexpr std::uint32_t kExhaustiveOrderCap = 20;

struct CheckTotals {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  // hypotheses unmet or computation error
};

struct SweepSummary {
  std::uint64_t sets = 0;
  std::map<std::string, CheckTotals> totals;  // keyed by check id
  std::uint64_t failures() const;
};

// Outcome of one check on one instance. `error` is set when the computation
// was abandoned (search cap); the verdict is then unmet.
struct CheckOutcome {
  Verdict verdict;
  std::optional<std::string> error;
};
CheckOutcome evaluate_check(const std::string& id, const CayleyContext& ctx, const CheckParams& params);

// Uniform draw from [0, bound) without modulo bias.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);
// Uniform non-empty subset of g.
GroupSet random_nonempty_set(const Group& g, std::mt19937_64& rng);

// Throws Error(ParseError) for invalid configurations. Writes the JSONL
// verdict lines followed by one trailer line.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace isoper
