#pragma once

#include <optional>
#include <string>
#include <vector>

namespace terwb {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // empty on success
};

/// Ordered list of named pass/fail checks with witnesses for failures.
class Report {
 public:
  void add(std::string name, bool ok, std::string witness = {}) {
    checks_.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
  }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  std::optional<Check> first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return c;
    return std::nullopt;
  }
  const std::vector<Check>& checks() const noexcept { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace terwb
