#include "isoper/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <limits>
#include <set>

#include "isoper/error.hpp"
#include "isoper/serialize.hpp"

namespace isoper {

namespace {

// Checks whose statement does not involve k; a sweep runs them once per set.
const std::set<std::string>& k_free_checks() {
  static const std::set<std::string> ids = {"signed-sumset-trichotomy", "atom-subgroup", "two-atom-subgroup",
                                            "subgroup-two-fragment", "hyperatom-quotient"};
  return ids;
}

constexpr std::size_t kBlockSize = 512;

struct Line {
  std::string text;
  std::string id;
  bool met = false;
  bool holds = true;
  bool vacuous = false;
};

}  // namespace

std::uint64_t SweepSummary::failures() const {
  std::uint64_t n = 0;
  for (const auto& [id, t] : totals) n += t.failed;
  return n;
}

CheckOutcome evaluate_check(const std::string& id, const CayleyContext& ctx, const CheckParams& params) {
  try {
    return {run_check(id, ctx, params), std::nullopt};
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::HypothesisNotMet:
        return {Verdict::unmet(id, Json{{"reason", e.what()}}), std::nullopt};
      case ErrorCode::SearchCapExceeded:
      case ErrorCode::ExponentCap:
        return {Verdict::unmet(id), std::string(e.what())};
      default:
        throw;
    }
  }
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::IndexOutOfRange, "empty range");
  // Rejection on the top partial bucket.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

GroupSet random_nonempty_set(const Group& g, std::mt19937_64& rng) {
  for (;;) {
    GroupSet s(g);
    std::uint64_t bits = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (x % 64 == 0) bits = rng();
      if ((bits >> (x % 64)) & 1U) s.insert(x);
    }
    if (!s.empty()) return s;
  }
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream& stream) {
  const Group g = parse_group(config.group_spec);
  std::vector<std::string> checks = config.checks.empty() ? check_ids() : config.checks;
  for (const auto& id : checks) {
    if (!is_check_id(id)) throw Error(ErrorCode::ParseError, "unknown check '" + id + "'");
  }
  if (config.jobs == 0) throw Error(ErrorCode::ParseError, "--jobs must be at least 1");

  std::uint64_t set_count = 0;
  std::optional<std::mt19937_64> rng;
  if (config.source == SetSource::Exhaustive) {
    if (g.order() > kExhaustiveOrderCap) {
      throw Error(ErrorCode::ParseError, "exhaustive sweeps need a group of order at most " +
                                             std::to_string(kExhaustiveOrderCap));
    }
    set_count = (std::uint64_t{1} << g.order()) - 1;
  } else {
    if (!config.seed) throw Error(ErrorCode::ParseError, "random sweeps need --seed");
    set_count = config.count;
    rng.emplace(*config.seed);
  }

  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + config.output_path + "'");
  }
  std::ostream& out = config.output_path.empty() ? stream : file;

  SweepSummary summary;
  summary.sets = set_count;
  for (const auto& id : checks) summary.totals[id];

  const std::string group_name = g.name();
  std::vector<GroupSet> block;
  std::vector<std::vector<Line>> lines;
  std::uint64_t next_mask = 1;
  std::uint64_t produced = 0;
  while (produced < set_count) {
    block.clear();
    while (block.size() < kBlockSize && produced < set_count) {
      if (rng) {
        block.push_back(random_nonempty_set(g, *rng));
      } else {
        GroupSet s(g);
        for (Element x = 0; x < g.order(); ++x) {
          if ((next_mask >> x) & 1U) s.insert(x);
        }
        block.push_back(std::move(s));
        ++next_mask;
      }
      ++produced;
    }
    lines.assign(block.size(), {});
    std::vector<std::exception_ptr> errors(block.size());

    const auto count = static_cast<std::int64_t>(block.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(config.jobs))
    for (std::int64_t i = 0; i < count; ++i) {
      try {
      const GroupSet& set = block[static_cast<std::size_t>(i)];
      const CayleyContext ctx = build_context(set);
      const Json set_json = config.hex ? Json(to_hex(set)) : to_json(set);
      auto& mine = lines[static_cast<std::size_t>(i)];
      for (std::size_t k = config.k_range.first; k <= config.k_range.last; ++k) {
        for (const auto& id : checks) {
          const bool k_free = k_free_checks().count(id) > 0;
          if (k_free && k != config.k_range.first) continue;
          CheckParams params;
          params.k = k;
          params.r = config.r;
          params.s = config.s;
          params.mode = config.mode;
          const CheckOutcome o = evaluate_check(id, ctx, params);
          Json j;
          j["theorem"] = id;
          j["group"] = group_name;
          j["set"] = set_json;
          j["k"] = k_free ? Json() : Json(k);
          j["hypotheses_met"] = o.verdict.hypotheses_met;
          j["holds"] = o.verdict.holds;
          j["vacuous"] = o.verdict.vacuous;
          j["witness"] = o.verdict.witness;
          j["counterexample"] = o.verdict.counterexample ? *o.verdict.counterexample : Json();
          if (o.error) j["error"] = *o.error;
          mine.push_back(Line{j.dump(), id, o.verdict.hypotheses_met, o.verdict.holds, o.verdict.vacuous});
        }
      }
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    for (const auto& per_set : lines) {
      for (const auto& line : per_set) {
        out << line.text << '\n';
        CheckTotals& t = summary.totals[line.id];
        if (!line.met) {
          ++t.skipped;
          continue;
        }
        ++t.checked;
        if (line.holds) ++t.held;
        if (line.vacuous) ++t.vacuous;
        if (!line.holds) ++t.failed;
      }
    }
  }

  Json totals = Json::object();
  for (const auto& id : checks) {
    const CheckTotals& t = summary.totals[id];
    totals[id] = Json{{"checked", t.checked}, {"held", t.held}, {"vacuous", t.vacuous},
                      {"failed", t.failed}, {"skipped", t.skipped}};
  }
  Json trailer{{"trailer", true}, {"group", group_name}, {"sets", set_count}, {"totals", totals}};
  out << trailer.dump() << '\n';
  out.flush();
  return summary;
}

}  // namespace isoper
