#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logmmp/polynomial.hpp"
#include "logmmp/rational.hpp"

namespace logmmp {

/// The two test families: a rational cuspidal tail of genus b (wall j = 2b+1)
/// and a nodal bridge of genus b made of two rational curves (wall j = 2b+2).
enum class Family { tail, bridge };

std::string to_string(Family f);
/// Accepts "tail" or "bridge"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

/// One irreducible component of a monomially parametrized curve: coordinate i
/// restricts to s^(degree - e) t^e, or vanishes.
struct ChartComponent {
  int degree;
  std::vector<std::optional<int>> exponents;
};

/// Monomial parametrization of the special component of a test curve.
class MonomialChart {
 public:
  /// Validates that every coordinate lives on some component, exponents lie
  /// in 0..degree, and coordinate -> exponent is injective on each component.
  /// Throws std::invalid_argument otherwise.
  MonomialChart(int num_coords, std::vector<ChartComponent> components);

  int num_coords() const { return num_coords_; }
  const std::vector<ChartComponent>& components() const { return components_; }

 private:
  int num_coords_;
  std::vector<ChartComponent> components_;
};

/// Diagonal one-parameter subgroup: a weight per chart coordinate, plus a
/// constant weight on the coordinates spanned by the external curve D.
class OnePS {
 public:
  /// Throws std::invalid_argument unless each chart weight equals the
  /// coordinate's t-exponent on every component where it does not vanish.
  OnePS(const MonomialChart& chart, std::vector<int> chart_weights, int external_weight, int external_count);

  const std::vector<int>& chart_weights() const { return chart_weights_; }
  int external_weight() const { return external_weight_; }
  int external_count() const { return external_count_; }
  int num_coords() const { return static_cast<int>(chart_weights_.size()) + external_count_; }
  /// Sum of all weights r.
  std::int64_t total_weight() const;

 private:
  std::vector<int> chart_weights_;
  int external_weight_;
  int external_count_;
};

/// A test family at fixed b: the chart, the rho-weights on its coordinates and
/// the constant weight rho has on D.
struct TestCurve {
  Family family;
  int b;
  MonomialChart chart;
  std::vector<int> weights;
  int external_weight;

  /// Smallest genus for which the complement D has genus >= 1.
  int min_genus() const;
  /// Number of ambient coordinates spanned by D only.
  int external_coordinate_count(int genus) const;
  /// rho on all 3g-3 ambient coordinates. Throws std::invalid_argument below min_genus().
  OnePS one_ps(int genus) const;
};

/// Cusp y^2 = x^(2b+1): a degree 4b-2 rational curve on 3b-1 coordinates with
/// t-exponents 0,2,..,2b,2b+1,..,4b-2. Throws std::invalid_argument for b < 2.
TestCurve tail_chart(int b);
/// Two degree 2b rational curves meeting in an A_{2b+1} point, on 3b+1
/// coordinates. Throws std::invalid_argument for b < 2.
TestCurve bridge_chart(int b);
TestCurve make_chart(Family family, int b);

/// Displayed total weight r = C(4b-1,2) - b^2 + (4b-2)(3g-3b-2).
Rat tail_total_weight_closed_form(int b, int genus);
/// Displayed total weight r = C(2b+1,2) + C(b+1,2) + b^2 + 2b(3g-3b-4).
Rat bridge_total_weight_closed_form(int b, int genus);

/// Tie-break between monomials of equal rho-weight. Both are lexicographic
/// on exponent vectors; they differ in which coordinate is most significant.
enum class TieBreak { low_index_first, high_index_first };

struct OracleResult {
  std::int64_t count;
  std::int64_t weight_sum;
  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

using ExponentVector = std::vector<int>;

/// Degree-m monomials in the chart coordinates outside the initial ideal of
/// the curve, for the rho-weighted order (higher weight is larger, ties by
/// the given lexicographic refinement). A monomial is standard iff its
/// restriction to the components is linearly independent of the restrictions
/// of all smaller monomials. Returned in increasing term order.
std::vector<ExponentVector> standard_monomials(const MonomialChart& chart, const OnePS& rho, int m,
                                               TieBreak tie_break = TieBreak::low_index_first);

/// Count and total rho-weight of standard_monomials(). Throws std::invalid_argument for m < 1.
OracleResult standard_monomial_weights(const MonomialChart& chart, const OnePS& rho, int m,
                                       TieBreak tie_break = TieBreak::low_index_first);

/// (8b^2-8b+2) m^2 + (2b-1) m - b^2.
Poly tail_weight_polynomial(int b);
/// 4b^2 m^2 + 2b m - C(b+1,2).
Poly bridge_weight_polynomial(int b);
Rat tail_weight_closed_form(int b, const Rat& m);
Rat bridge_weight_closed_form(int b, const Rat& m);

/// Hilbert polynomial of the special component: (4b-2)m+1-b (tail), 4bm+1-b (bridge).
Rat standard_count_closed_form(Family family, int b, const Rat& m);

/// Sections of O(m) on D vanishing at the attaching points:
/// (4m-1)(g-b-1)+2m-1 (tail), (4m-1)(g-b-1)-1 (bridge).
Rat external_section_count(Family family, int genus, int b, const Rat& m);

/// (4b-2) m ((4m-1)(g-b-1)+2m-1). Requires g >= b+1.
Rat external_weight_tail(int genus, int b, const Rat& m);
/// 2b m ((4m-1)(g-b-1)-1). Requires g >= b+2.
Rat external_weight_bridge(int genus, int b, const Rat& m);

/// Bicanonical Hilbert polynomial (4m-1)(g-1).
Rat hilbert_polynomial(int genus, const Rat& m);

/// Normalized Hilbert-Mumford index m P(m)/(3g-3) r - w_R(m) - w_D(m), with
/// w_R supplied by the caller (closed form or oracle).
Rat assemble_mu(const TestCurve& curve, int genus, const Rat& m, const Rat& standard_weight);

/// Assembled index using the closed-form w_R. Throws std::invalid_argument
/// for b < 2, a genus below the family minimum, or m < 1.
Rat mu_tail(int genus, int b, const Rat& m);
Rat mu_bridge(int genus, int b, const Rat& m);
Rat mu(Family family, int genus, int b, const Rat& m);

/// (1/3)(m-1)((4b^2-8b+2)m - 3b^2).
Poly mu_tail_polynomial(int b);
/// (1/6)(m-1)(4b(b-1)m - 3b(b+1)).
Poly mu_bridge_polynomial(int b);

/// Factored alpha-forms, j = 2b+1 odd >= 5 for tails:
///   (8j^2-8j-4)(17 alpha - 8) / (8 (7-10 alpha)^2) * (alpha - alpha_j)
/// and j = 2b+2 even >= 6 for bridges:
///   (j^2-j-2)(17 alpha - 8) / (2 (7-10 alpha)^2) * (alpha - alpha_j).
/// Throw std::invalid_argument on parity or range violations.
RatFunc mu_alpha_tail(int j);
RatFunc mu_alpha_bridge(int j);

/// The same quantities obtained by substituting m = m(alpha) into the m-forms.
RatFunc mu_alpha_tail_by_substitution(int j);
RatFunc mu_alpha_bridge_by_substitution(int j);

enum class Stability { stable, strictly_semistable, unstable };
std::string to_string(Stability s);

struct StabilityVerdict {
  Rat mu;
  Stability classification;
};

/// Positive index: rho does not destabilize.
StabilityVerdict classify(const Rat& mu);

/// Index of the curve with the special component collapsed to a singular point.
inline Rat mirror_mu(const Rat& mu) { return -mu; }

/// Weights 4b+2-2i, i = 0..2b-1, of rho on the versal deformation parameters of the cusp.
std::vector<int> versal_weights_tail(int b);

}  // namespace logmmp
