#include "isoper/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "isoper/error.hpp"
#include "isoper/parse.hpp"
#include "isoper/serialize.hpp"
#include "isoper/structure.hpp"
#include "isoper/sweep.hpp"

namespace isoper {

namespace {

struct Options {
  std::string group;
  std::string set;
  std::string k;  // empty: the subcommand default
  unsigned r = 1;
  unsigned s = 1;
  std::vector<std::string> checks;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 0;
  std::string out;
  unsigned jobs = 1;
  std::string mode = "atom";
  std::string set_source = "exhaustive";
  bool hex = false;
};

DesertMode parse_mode(const std::string& m) {
  return m == "hyperatom" ? DesertMode::HyperAtom : DesertMode::Atom;
}

std::string k_or(const Options& o, const char* fallback) { return o.k.empty() ? fallback : o.k; }

std::size_t single_k(const std::string& text) {
  const KRange r = parse_k_range(text);
  if (r.first != r.last) throw Error(ErrorCode::ParseError, "--k takes a single value here");
  return r.first;
}

Json context_json(const CayleyContext& ctx) {
  return Json{{"group", ctx.group().name()},
              {"set", to_json(ctx.original_set())},
              {"translate", ctx.translate_used()},
              {"vertices", ctx.vertex_count()}};
}

Json atoms_json(const std::vector<GroupSet>& atoms) {
  Json arr = Json::array();
  for (const auto& a : atoms) arr.push_back(to_json(a));
  return arr;
}

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(); }

int cmd_kappa(const Options& o, std::ostream& out) {
  const CayleyContext ctx = build_context(parse_set(parse_group(o.group), o.set));
  const std::size_t k = single_k(k_or(o, "1"));
  const KappaReport rep = kappa(ctx, k);
  Json j = context_json(ctx);
  j["k"] = k;
  j["separable"] = rep.separable;
  j["kappa"] = opt_json(rep.kappa);
  j["atom_cardinality"] = opt_json(rep.atom_cardinality);
  j["atom_count"] = rep.atom_count;
  j["atoms"] = atoms_json(rep.atoms);
  j["fragment_count"] = rep.fragment_count;
  j["min_degree"] = rep.min_degree;
  j["exhaustive"] = rep.exhaustive;
  j["candidates_examined"] = rep.candidates_examined;
  if (rep.subgroup_kappa) j["subgroup_kappa"] = *rep.subgroup_kappa;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_atoms(const Options& o, std::ostream& out) {
  const CayleyContext ctx = build_context(parse_set(parse_group(o.group), o.set));
  const std::size_t k = single_k(k_or(o, "1"));
  Json j = context_json(ctx);
  j["k"] = k;
  if (!is_k_separable(ctx, k)) {
    j["separable"] = false;
    out << j.dump() << '\n';
    return kExitHypothesesUnmet;
  }
  const auto atoms = k_atoms(ctx, k);
  const KappaReport rep = kappa(ctx, k);
  j["separable"] = true;
  j["kappa"] = opt_json(rep.kappa);
  j["atom_cardinality"] = opt_json(rep.atom_cardinality);
  j["atoms"] = atoms_json(atoms);
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_hyperatom(const Options& o, std::ostream& out) {
  const CayleyContext ctx = build_context(parse_set(parse_group(o.group), o.set));
  Json j = context_json(ctx);
  if (!is_k_separable(ctx, 1)) {
    j["separable"] = false;
    out << j.dump() << '\n';
    return kExitHypothesesUnmet;
  }
  const HyperAtom ha = hyper_atom(ctx);
  j["separable"] = true;
  j["kappa1"] = ha.kappa1;
  j["H"] = to_json(ha.subgroup);
  Json maximal = Json::array();
  for (const auto& h : ha.maximal) maximal.push_back(to_json(h));
  j["maximal"] = maximal;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_subatom(const Options& o, std::ostream& out) {
  const CayleyContext ctx = build_context(parse_set(parse_group(o.group), o.set));
  const DesertMode mode = parse_mode(o.mode);
  Json j = context_json(ctx);
  j["mode"] = to_string(mode);
  DesertSequence seq;
  try {
    seq = desert_sequence(ctx, mode);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisNotMet) throw;
    j["hypotheses_met"] = false;
    j["reason"] = e.what();
    out << j.dump() << '\n';
    return kExitHypothesesUnmet;
  }
  j["hypotheses_met"] = true;
  Json steps = Json::array();
  for (const auto& st : seq.steps) {
    steps.push_back(Json{{"set", to_json(st.set)}, {"H", to_json(st.fragment_subgroup)}});
  }
  j["steps"] = steps;
  j["length"] = seq.length;
  j["M"] = to_json(seq.sub_atom);
  j["strict_halving_violations"] = seq.strict_halving_violations;
  j["halving_violations"] = seq.halving_violations;
  j["unique_desertic"] = seq.unique_desertic;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_sumset(const Options& o, std::ostream& out) {
  const GroupSet s = parse_set(parse_group(o.group), o.set);
  const GroupSet result = signed_sumset(s, o.r, o.s);
  out << Json{{"result", to_json(result)}, {"size", result.size()}}.dump() << '\n';
  return kExitOk;
}

int cmd_critical(const Options& o, std::ostream& out) {
  const CayleyContext ctx = build_context(parse_set(parse_group(o.group), o.set));
  const std::size_t k = single_k(k_or(o, "2"));
  const CriticalPairReport rep = analyze_critical_pair(ctx, k);
  Json j = context_json(ctx);
  j["k"] = k;
  j["sumset_size"] = rep.sumset_size;
  j["sumset_aperiodic"] = rep.sumset_aperiodic;
  j["set_is_AP"] = rep.set_is_ap;
  j["critical"] = rep.critical;
  j["two_separable"] = rep.two_separable;
  j["H"] = rep.hyper_atom ? to_json(*rep.hyper_atom) : Json();
  j["S0"] = rep.smaller_component ? to_json(*rep.smaller_component) : Json();
  j["doubling_size"] = rep.doubling_size;
  j["quotient_set_is_AP"] = rep.quotient_set_is_ap;
  j["rest_is_periodic"] = rep.rest_is_periodic;
  j["component_is_critical"] = rep.component_is_critical;
  j["quotient_is_vosper"] = rep.quotient_is_vosper ? Json(*rep.quotient_is_vosper) : Json();
  j["case"] = to_string(rep.tag);
  Json cases = Json::array();
  for (auto c : rep.cases) cases.push_back(to_string(c));
  j["cases"] = cases;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const CayleyContext ctx = build_context(parse_set(parse_group(o.group), o.set));
  const std::vector<std::string> ids = o.checks.empty() ? check_ids() : o.checks;
  for (const auto& id : ids) {
    if (!is_check_id(id)) throw Error(ErrorCode::ParseError, "unknown check '" + id + "'");
  }
  CheckParams params;
  params.k = single_k(k_or(o, "2"));
  params.r = o.r;
  params.s = o.s;
  params.mode = parse_mode(o.mode);
  Json verdicts = Json::array();
  bool any_met = false, any_failed = false, any_error = false;
  for (const auto& id : ids) {
    const CheckOutcome res = evaluate_check(id, ctx, params);
    Json v = to_json(res.verdict);
    if (res.error) {
      v["error"] = *res.error;
      any_error = true;
    }
    verdicts.push_back(std::move(v));
    any_met = any_met || res.verdict.hypotheses_met;
    any_failed = any_failed || !res.verdict.holds;
  }
  out << Json{{"verdicts", verdicts}}.dump() << '\n';
  if (any_failed) return kExitCounterexample;
  if (any_error) return kExitComputation;
  return any_met ? kExitOk : kExitHypothesesUnmet;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig c;
  c.group_spec = o.group;
  c.k_range = parse_k_range(k_or(o, "2"));
  c.source = o.set_source == "random" ? SetSource::Random : SetSource::Exhaustive;
  c.count = o.count;
  c.seed = o.seed;
  c.checks = o.checks;
  c.output_path = o.out;
  c.jobs = o.jobs;
  c.r = o.r;
  c.s = o.s;
  c.mode = parse_mode(o.mode);
  c.hex = o.hex;
  const SweepSummary summary = run_sweep(c, out);
  return summary.failures() > 0 ? kExitCounterexample : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoperimetric invariants of abelian Cayley graphs", "isoper"};
  app.require_subcommand(1);
  Options o;

  const auto add_instance = [&](CLI::App* sub, bool needs_set) {
    sub->add_option("--group", o.group, "group, e.g. Z12 or Z4xZ2")->required();
    auto* set = sub->add_option("--set", o.set, "elements, e.g. 0,1,6, or a 0x bitmask");
    if (needs_set) set->required();
  };
  const auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "k (sweep: a range such as 2..4)"); };
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "desert-sequence subgroup")->check(CLI::IsMember({"atom", "hyperatom"}));
  };

  auto* kappa_cmd = app.add_subcommand("kappa", "kappa_k with its atoms and fragment count");
  add_instance(kappa_cmd, true);
  add_k(kappa_cmd);
  auto* atoms_cmd = app.add_subcommand("atoms", "every k-atom containing 0");
  add_instance(atoms_cmd, true);
  add_k(atoms_cmd);
  auto* hyper_cmd = app.add_subcommand("hyperatom", "the hyper-atom");
  add_instance(hyper_cmd, true);
  auto* sub_cmd = app.add_subcommand("subatom", "the desert sequence and its sub-atom");
  add_instance(sub_cmd, true);
  add_mode(sub_cmd);
  auto* sumset_cmd = app.add_subcommand("sumset", "rS - sS");
  add_instance(sumset_cmd, true);
  sumset_cmd->add_option("--r", o.r, "positive multiple");
  sumset_cmd->add_option("--s", o.s, "negative multiple");
  auto* critical_cmd = app.add_subcommand("critical", "critical-pair report for kS");
  add_instance(critical_cmd, true);
  add_k(critical_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "run checks on one set");
  add_instance(verify_cmd, true);
  add_k(verify_cmd);
  verify_cmd->add_option("--check", o.checks, "check id (repeatable; default all)");
  verify_cmd->add_option("--r", o.r);
  verify_cmd->add_option("--s", o.s);
  add_mode(verify_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "run checks over many sets, JSONL output");
  add_instance(sweep_cmd, false);
  add_k(sweep_cmd);
  sweep_cmd->add_option("--check", o.checks, "check id (repeatable; default all)");
  sweep_cmd->add_option("--r", o.r);
  sweep_cmd->add_option("--s", o.s);
  add_mode(sweep_cmd);
  sweep_cmd->add_option("--set-source", o.set_source)->check(CLI::IsMember({"exhaustive", "random"}));
  sweep_cmd->add_option("--seed", o.seed, "64-bit seed (random source)");
  sweep_cmd->add_option("--count", o.count, "number of random sets");
  sweep_cmd->add_option("--out", o.out, "JSONL output file");
  sweep_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--hex", o.hex, "write sets as hex bitmasks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!o.set.empty() && sweep_cmd->parsed()) {
    err << "sweep does not take --set\n";
    return kExitUsage;
  }

  try {
    if (kappa_cmd->parsed()) return cmd_kappa(o, out);
    if (atoms_cmd->parsed()) return cmd_atoms(o, out);
    if (hyper_cmd->parsed()) return cmd_hyperatom(o, out);
    if (sub_cmd->parsed()) return cmd_subatom(o, out);
    if (sumset_cmd->parsed()) return cmd_sumset(o, out);
    if (critical_cmd->parsed()) return cmd_critical(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    return cmd_sweep(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::SearchCapExceeded:
      case ErrorCode::ExponentCap:
      case ErrorCode::NotSeparable:
        return kExitComputation;
      case ErrorCode::HypothesisNotMet:
        return kExitHypothesesUnmet;
      default:
        return kExitUsage;
    }
  }
}

}  // namespace isoper
