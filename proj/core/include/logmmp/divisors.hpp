#pragma once

#include <array>
#include <vector>

#include "logmmp/polynomial.hpp"
#include "logmmp/rational.hpp"

namespace logmmp {

/// Symmetric boundary divisor class sum_k r_k B_k on M_{0,2g+2}/S_{2g+2},
/// stored at the canonical indices k = 2..g+1.
class BoundaryDivisorClass {
 public:
  /// The zero class. Throws std::invalid_argument for g < 2.
  explicit BoundaryDivisorClass(int genus);
  /// coeffs[0] is the coefficient at k = 2. Size must be g.
  BoundaryDivisorClass(int genus, std::vector<Rat> coeffs);

  /// The pure class B_k.
  static BoundaryDivisorClass unit(int genus, int k);

  int genus() const { return genus_; }
  int min_index() const { return 2; }
  int max_index() const { return genus_ + 1; }

  /// Coefficient at a canonical index 2..g+1; throws std::out_of_range otherwise.
  const Rat& coeff(int k) const;
  void set_coeff(int k, Rat value);

  /// Coefficient at any index 0..2g+2, folded to min(k, 2g+2-k). Folded
  /// indices 0 and 1 carry no boundary divisor and read as zero.
  Rat lookup(int k) const;

  /// Coefficients in index order 2..g+1.
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  BoundaryDivisorClass& operator+=(const BoundaryDivisorClass& rhs);
  friend BoundaryDivisorClass operator+(BoundaryDivisorClass lhs, const BoundaryDivisorClass& rhs) {
    return lhs += rhs;
  }
  BoundaryDivisorClass& operator*=(const Rat& c);
  friend BoundaryDivisorClass operator*(const Rat& c, BoundaryDivisorClass d) { return d *= c; }

  friend bool operator==(const BoundaryDivisorClass&, const BoundaryDivisorClass&) = default;

 private:
  int genus_;
  std::vector<Rat> coeffs_;
};

/// Canonical boundary index min(k, 2g+2-k). Throws std::out_of_range unless 0 <= k <= 2g+2.
int fold_index(int genus, int k);

/// B_k coefficient r_k of L_alpha, as a polynomial in alpha.
Poly l_alpha_coefficient(int genus, int k);

/// L_alpha = sum r_k B_k. Throws std::invalid_argument for g < 2.
BoundaryDivisorClass make_l_alpha(int genus, const Rat& alpha);

/// One-dimensional boundary stratum given by an unordered partition
/// {a, b, c, d} of 2g+2 into positive parts. Parts are kept sorted.
class VitalCurve {
 public:
  /// Throws std::invalid_argument unless all parts are >= 1 and sum to 2g+2.
  VitalCurve(int genus, std::array<int, 4> parts);

  int genus() const { return genus_; }
  const std::array<int, 4>& parts() const { return parts_; }

  friend bool operator==(const VitalCurve&, const VitalCurve&) = default;
  friend auto operator<=>(const VitalCurve&, const VitalCurve&) = default;

 private:
  int genus_;
  std::array<int, 4> parts_;
};

/// All vital curves of M_{0,2g+2}/S_{2g+2}, each multiset once, in
/// lexicographic order of sorted parts.
std::vector<VitalCurve> enumerate_vital_curves(int genus);

/// r_{a+b} + r_{b+c} + r_{a+c} - r_a - r_b - r_c - r_d, every index folded.
/// Throws std::invalid_argument on a genus mismatch.
Rat intersect(const BoundaryDivisorClass& divisor, const VitalCurve& curve);

/// The same pairing with the parts taken in the given order (a, b, c, d).
/// Folding makes the value independent of the labeling.
Rat intersect_labeled(const BoundaryDivisorClass& divisor, const std::array<int, 4>& labeled_parts);

struct NefScanReport {
  Rat minimum;
  std::vector<VitalCurve> negative;
  std::vector<VitalCurve> zero;
};

/// Pairs the class with every vital curve, exhaustively.
NefScanReport nef_scan(const BoundaryDivisorClass& divisor);

}  // namespace logmmp
