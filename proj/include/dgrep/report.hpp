#pragma once

#include <string>
#include <deque>

namespace dgrep {

/// One named property with its first counterexample, if any.
struct Check {
  std::string name;
  bool ok = true;
  std::string counterexample;
};

struct Report {
  std::deque<Check> checks;  // deque: add() hands out references that must stay valid

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Check& add(std::string name) {
    checks.push_back({std::move(name), true, {}});
    return checks.back();
  }

  /// Marks the check failed, keeping only the first counterexample.
  static void fail(Check& c, std::string counterexample) {
    if (!c.ok) return;
    c.ok = false;
    c.counterexample = std::move(counterexample);
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace dgrep
