#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "logmmp/rational.hpp"

namespace logmmp {

struct VerifyOptions {
  /// Widen the (b, m, g, j) ranges.
  bool deep = false;
  /// Closed forms the oracle groups are checked against. Replaceable so a
  /// perturbed constant can be shown to fail.
  std::function<Rat(int b, const Rat& m)> tail_weight = nullptr;
  std::function<Rat(int b, const Rat& m)> bridge_weight = nullptr;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string failure;  // first failing case, empty when passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Runs every identity and oracle cross-check of the library. Groups run in
/// a fixed order and each stops at its first failing case.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace logmmp
