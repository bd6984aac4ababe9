#pragma once
// Worked examples from the literature, pinned exactly. Shared by `mcc
// selftest` and the acceptance binary.

#include <functional>
#include <string>
#include <vector>

namespace mcc {

struct GoldenCheck {
  std::string group;  // e.g. "atoms", "grassmannian"
  std::string name;
  std::function<bool()> run;
};

struct GoldenResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;  // exception text, if any
};

std::vector<GoldenCheck> golden_checks();

/// Runs the checks in order; an exception counts as a failure.
std::vector<GoldenResult> run_golden(const std::vector<GoldenCheck>& checks);

}  // namespace mcc
