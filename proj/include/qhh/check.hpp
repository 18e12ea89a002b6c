#pragma once

#include <string>
#include <vector>

namespace qhh {

/* Outcome of a verification pass: a pass/fail flag plus human-readable
 * detail lines (first failure first).  Warnings do not flip the flag. */
struct CheckReport {
  bool passed = true;
  std::vector<std::string> lines;

  void fail(std::string msg) {
    passed = false;
    lines.push_back("FAIL: " + std::move(msg));
  }
  void warn(std::string msg) { lines.push_back("WARN: " + std::move(msg)); }
  void note(std::string msg) { lines.push_back(std::move(msg)); }
  void absorb(const CheckReport& o) {
    passed = passed && o.passed;
    lines.insert(lines.end(), o.lines.begin(), o.lines.end());
  }
  std::string summary() const;
};

}  // namespace qhh
