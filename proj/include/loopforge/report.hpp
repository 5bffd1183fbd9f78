#pragma once

#include <string>
#include <vector>

namespace loopforge {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass, counterexample description on fail
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool pass,
           const std::string& witness = "") {
    checks.push_back({name, pass, pass ? std::string{} : witness});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  void merge(const VerificationReport& o) {
    for (const auto& c : o.checks) checks.push_back(c);
  }
};

}  // namespace loopforge
