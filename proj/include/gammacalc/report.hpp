#pragma once

#include <string>
#include <vector>

namespace gammacalc {

// Tally of a batch of verification checks; used by the self-check routines
// and surfaced through the CLI.
struct CheckReport {
  int checks = 0;
  std::vector<std::string> failures;

  void pass() { ++checks; }
  void fail(std::string message) {
    ++checks;
    failures.push_back(std::move(message));
  }
  void require(bool ok, const std::string& message) {
    if (ok)
      pass();
    else
      fail(message);
  }
  void merge(const CheckReport& o) {
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  bool ok() const { return failures.empty(); }

  std::string summary() const {
    std::string out = std::to_string(checks) + " checks, " +
                      std::to_string(failures.size()) + " failures";
    for (const auto& f : failures) out += "\n  FAIL " + f;
    return out;
  }
};

}  // namespace gammacalc
