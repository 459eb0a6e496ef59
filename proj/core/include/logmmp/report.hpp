#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "logmmp/divisors.hpp"
#include "logmmp/hilbert.hpp"
#include "logmmp/walls.hpp"

// JSON and CSV forms of the library's values. All numbers that are not
// small integers are exact "p/q" strings.

namespace logmmp {

/// {"genus": g, "coeffs": {"2": "p/q", ...}}
std::string divisor_to_json(const BoundaryDivisorClass& divisor, int indent = -1);
/// Throws std::invalid_argument on schema violations.
BoundaryDivisorClass divisor_from_json(std::string_view text);

/// Sorted 4-array, e.g. [1,1,2,4].
std::string vital_curve_to_json(const VitalCurve& curve);

/// {"genus": g, "rows": [{"j": j, "alpha": "p/q", "class": {...}}, ...]}
std::string wall_table_to_json(const WallTable& table, int indent = 2);
WallTable wall_table_from_json(std::string_view text);
/// Header "j,alpha,k,coefficient", one row per (j, k).
std::string wall_table_to_csv(const WallTable& table);

struct MuReport {
  Family family;
  int b;
  int genus;
  Rat m;
  Rat mu;
  Stability classification;
  std::optional<OracleResult> oracle;
  /// alpha corresponding to m, and whether it lies in (8/17, 7/10).
  Rat alpha;
  bool in_stability_window;
};

/// Assembles mu at (family, g, b, m). With with_oracle, m must be an integer
/// and the brute-force standard-monomial count and weight sum are attached.
/// Throws std::invalid_argument on domain violations.
MuReport make_mu_report(Family family, int genus, int b, const Rat& m, bool with_oracle);

/// {"family", "b", "g", "m", "mu", "classification", "oracle", "alpha", "in_stability_window"}
std::string mu_report_to_json(const MuReport& report, int indent = 2);
MuReport mu_report_from_json(std::string_view text);

}  // namespace logmmp
