#pragma once

#include <map>
#include <string>
#include <vector>

namespace qhopf {

struct CheckResult {
  std::string description;
  bool pass = false;
  std::string counterexample;  // empty when the check passed
};

/// Machine-readable outcome of one verification suite.  A report passes iff
/// every check passes; caveats flag every place where a truncation proxy
/// stands in for an analytic statement.
struct LemmaReport {
  std::string lemma_id;
  std::map<std::string, std::string> parameters;
  std::vector<CheckResult> checks;
  std::vector<std::string> caveats;
  int inconclusive = 0;

  bool pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void check(const std::string& description, bool ok,
             const std::string& counterexample = "") {
    checks.push_back(CheckResult{description, ok, ok ? "" : counterexample});
  }

  std::string summary() const {
    std::string out = lemma_id;
    out += pass() ? ": PASS" : ": FAIL";
    std::size_t passed = 0;
    for (const CheckResult& c : checks) passed += c.pass ? 1 : 0;
    out += " (" + std::to_string(passed) + "/" + std::to_string(checks.size()) +
           " checks";
    if (inconclusive > 0)
      out += ", " + std::to_string(inconclusive) + " inconclusive";
    out += ")";
    return out;
  }
};

}  // namespace qhopf
