#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace isoper {

using Json = nlohmann::ordered_json;

// Outcome of checking one theorem on one instance. `holds` is meaningful
// only when the hypotheses are met; a counterexample is present iff the
// conclusion failed. `vacuous` marks a pass whose conclusion had nothing to
// check (for instance no atom large enough to be constrained).
struct Verdict {
  std::string theorem;
  bool hypotheses_met = false;
  bool holds = true;
  bool vacuous = false;
  Json witness = Json::object();
  std::optional<Json> counterexample;

  static Verdict unmet(std::string theorem, Json witness = Json::object()) {
    Verdict v;
    v.theorem = std::move(theorem);
    v.witness = std::move(witness);
    return v;
  }
  static Verdict checked(std::string theorem) {
    Verdict v;
    v.theorem = std::move(theorem);
    v.hypotheses_met = true;
    return v;
  }

  // Record a failed clause. The first failure wins.
  void fail(Json detail) {
    if (!holds) return;
    holds = false;
    counterexample = std::move(detail);
  }
  // Fails with `what` unless `ok`.
  void require(bool ok, const char* what, Json detail = Json::object()) {
    if (ok) return;
    detail["clause"] = what;
    fail(std::move(detail));
  }
};

}  // namespace isoper
