#include "idealkit/report.hpp"

#include <algorithm>

namespace idealkit {

void Report::add(std::string name, bool passed, std::string expected, std::string actual) {
  checks.push_back({std::move(name), passed, std::move(expected), std::move(actual), true});
}

void Report::add_inconclusive(std::string name, std::string reason) {
  checks.push_back({std::move(name), false, {}, std::move(reason), false});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.applicable || c.passed; });
}

bool Report::inconclusive() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.applicable; });
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.applicable && !c.passed) return &c;
  }
  return nullptr;
}

std::string Report::to_string() const {
  std::string out = title.empty() ? std::string() : title + "\n";
  for (const auto& c : checks) {
    out += "  ";
    out += !c.applicable ? "SKIP " : c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.applicable) {
      out += " (" + c.actual + ")";
    } else if (!c.passed) {
      out += ": expected " + c.expected + ", got " + c.actual;
    }
    out += "\n";
  }
  return out;
}

}  // namespace idealkit
