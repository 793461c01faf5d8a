#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace hardsq::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool ok() const;
};

/// Runs the invariant checks for one instance. Checks that need the full
/// complex are skipped with a note when it is larger than the cell cap;
/// acyclicity and oracle agreement run only when `deep` is set.
VerifyReport run_verify(int n, int p, int q, bool deep, const RunConfig& cfg);

}  // namespace hardsq::cli
