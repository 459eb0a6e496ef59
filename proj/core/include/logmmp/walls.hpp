#pragma once

#include <optional>
#include <vector>

#include "logmmp/divisors.hpp"
#include "logmmp/polynomial.hpp"
#include "logmmp/rational.hpp"

namespace logmmp {

/// Coefficient c_j = C(j,2) r_2 - r_j of the exceptional B_j when B_j is
/// contracted, with r_k the coefficients of make_l_alpha(g, alpha).
/// Requires g >= 2 and 3 <= j <= g+1; throws std::out_of_range otherwise.
Rat wall_coefficient(int genus, int j, const Rat& alpha);

/// c_j as a degree-1 polynomial in alpha, built from the symbolic L_alpha
/// coefficients. Its root is the wall.
Poly wall_polynomial(int genus, int j);

/// Simplified g-free form of c_j: (j(j-1) - 1/2) alpha - (3j^2+10j-21)/8 for
/// odd j, (j-2)((j+1) alpha - (3j/8 + 2)) for even j.
Poly wall_polynomial_simplified(int j);

/// Closed-form critical value alpha_j: 1 for j = 2,
/// (3j^2+10j-21)/(8j^2-8j-4) for odd j, (3j+16)/(8j+8) for even j >= 4.
/// Throws std::out_of_range for j < 2.
Rat critical_alpha(int j);

/// L^[j] = L^[j-1] + c_j B_j: the B_j coefficient becomes C(j,2) r_2.
/// Throws std::out_of_range when j is outside 3..g+1 and std::invalid_argument
/// when the coefficients below j are not yet C(k,2) r_2.
BoundaryDivisorClass discrepancy_step(const BoundaryDivisorClass& previous, int j);

/// Closed form: C(k,2) r_2 for k <= j, r_k above. Requires 2 <= j <= g+1.
BoundaryDivisorClass pullback_class(int genus, const Rat& alpha, int j);

struct WallRow {
  int j;
  Rat alpha;
  BoundaryDivisorClass pullback;
};

struct WallTable {
  int genus;
  std::vector<WallRow> rows;  // j = 3..g+1

  bool is_strictly_decreasing() const;
};

WallTable build_wall_table(int genus);

/// m = 3(2 - alpha) / (2(7 - 10 alpha)). Throws std::domain_error at alpha = 7/10.
Rat m_of_alpha(const Rat& alpha);
/// alpha = (14m - 6) / (20m - 3). Throws std::domain_error at m = 3/20.
Rat alpha_of_m(const Rat& m);
/// The alpha <-> m correspondence as a rational function of alpha.
RatFunc m_of_alpha_function();
/// True on the open window 8/17 < alpha < 7/10 where the correspondence maps
/// onto m in (1, infinity). Values outside are still computed, just flagged.
bool in_stability_window(const Rat& alpha);

/// lambda and delta coefficients of a linearization class.
struct LinearizationClass {
  Rat lambda;
  Rat delta;
  friend bool operator==(const LinearizationClass&, const LinearizationClass&) = default;
};

/// (m-1) ((6 m nu^2 - 2 m nu - 2 nu + 1) lambda - (m nu^2 / 2) delta).
/// Throws std::invalid_argument for nu < 1.
LinearizationClass hilbert_linearization(int nu, const Rat& m);

/// 13 lambda - (2 - alpha) delta.
LinearizationClass log_canonical_pullback(const Rat& alpha);

/// Coefficients 2k(k-1)/(2g+1) on B_k, k = 2..g+1.
std::vector<Rat> symmetric_git_class(int genus);

/// C(k,2) for k = 2..g+1.
std::vector<Rat> binomial_vector(int genus);

/// The scalar t with v = t w, if any. Throws std::invalid_argument when the
/// lengths differ or both vectors are zero.
std::optional<Rat> proportionality_check(const std::vector<Rat>& v, const std::vector<Rat>& w);

}  // namespace logmmp
