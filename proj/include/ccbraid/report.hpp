#pragma once

#include <string>
#include <vector>

namespace ccb {

/// One checked identity. Fields never contain whitespace.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

/// Machine-parsable lines "ID PASS|FAIL lhs rhs".
class Report {
 public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void append(const Report& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
  }

  const std::vector<CheckResult>& results() const noexcept { return results_; }
  bool all_pass() const noexcept {
    for (const auto& r : results_)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const noexcept {
    std::size_t f = 0;
    for (const auto& r : results_) f += r.pass ? 0 : 1;
    return f;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& r : results_)
      out += r.id + (r.pass ? " PASS " : " FAIL ") + r.lhs + ' ' + r.rhs + '\n';
    return out;
  }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace ccb
