#pragma once

#include <string>
#include <vector>

namespace idealkit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  // False when a precondition of the check did not hold; never counted as a pass.
  bool applicable = true;
};

/// Named list of checks produced by the verification routines.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string expected = {}, std::string actual = {});
  void add_inconclusive(std::string name, std::string reason);

  // Every applicable check passed.
  bool passed() const;
  bool inconclusive() const;
  const CheckResult* first_failure() const;
  std::string to_string() const;
};

}  // namespace idealkit
