#include "logmmp/divisors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace logmmp {

namespace {

void require_genus(int genus) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
}

}  // namespace

BoundaryDivisorClass::BoundaryDivisorClass(int genus) : genus_(genus) {
  require_genus(genus);
  coeffs_.assign(static_cast<std::size_t>(genus), Rat(0));
}

BoundaryDivisorClass::BoundaryDivisorClass(int genus, std::vector<Rat> coeffs)
    : genus_(genus), coeffs_(std::move(coeffs)) {
  require_genus(genus);
  if (coeffs_.size() != static_cast<std::size_t>(genus)) {
    throw std::invalid_argument("divisor class of genus " + std::to_string(genus) + " needs " +
                                std::to_string(genus) + " coefficients (B_2..B_" + std::to_string(genus + 1) +
                                "), got " + std::to_string(coeffs_.size()));
  }
}

BoundaryDivisorClass BoundaryDivisorClass::unit(int genus, int k) {
  BoundaryDivisorClass d(genus);
  d.set_coeff(k, Rat(1));
  return d;
}

const Rat& BoundaryDivisorClass::coeff(int k) const {
  if (k < 2 || k > genus_ + 1) {
    throw std::out_of_range("boundary index " + std::to_string(k) + " outside 2.." + std::to_string(genus_ + 1));
  }
  return coeffs_[static_cast<std::size_t>(k - 2)];
}

void BoundaryDivisorClass::set_coeff(int k, Rat value) {
  if (k < 2 || k > genus_ + 1) {
    throw std::out_of_range("boundary index " + std::to_string(k) + " outside 2.." + std::to_string(genus_ + 1));
  }
  coeffs_[static_cast<std::size_t>(k - 2)] = std::move(value);
}

Rat BoundaryDivisorClass::lookup(int k) const {
  int c = fold_index(genus_, k);
  return c < 2 ? Rat(0) : coeff(c);
}

BoundaryDivisorClass& BoundaryDivisorClass::operator+=(const BoundaryDivisorClass& rhs) {
  if (genus_ != rhs.genus_) throw std::invalid_argument("adding divisor classes of different genus");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

BoundaryDivisorClass& BoundaryDivisorClass::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

int fold_index(int genus, int k) {
  const int n = 2 * genus + 2;
  if (k < 0 || k > n) {
    throw std::out_of_range("index " + std::to_string(k) + " outside 0.." + std::to_string(n));
  }
  return std::min(k, n - k);
}

Poly l_alpha_coefficient(int genus, int k) {
  require_genus(genus);
  if (k < 2 || k > genus + 1) throw std::out_of_range("L_alpha has no B_" + std::to_string(k) + " term");
  const Rat scale(13, 4L * genus + 2);
  const Poly alpha_minus_2 = Poly::identity(Var::alpha) - Rat(2);
  if (k % 2 == 0) {
    const long s = k / 2;
    return Poly::constant(Var::alpha, scale * Rat(s * (genus + 1 - s))) + Rat(2) * alpha_minus_2;
  }
  const long s = (k - 1) / 2;
  return Poly::constant(Var::alpha, scale * Rat(s * (genus - s))) + Rat(1, 2) * alpha_minus_2;
}

BoundaryDivisorClass make_l_alpha(int genus, const Rat& alpha) {
  require_genus(genus);
  BoundaryDivisorClass d(genus);
  for (int k = 2; k <= genus + 1; ++k) d.set_coeff(k, l_alpha_coefficient(genus, k)(alpha));
  return d;
}

VitalCurve::VitalCurve(int genus, std::array<int, 4> parts) : genus_(genus), parts_(parts) {
  require_genus(genus);
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 1; })) {
    throw std::invalid_argument("vital curve parts must be positive");
  }
  const int sum = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (sum != 2 * genus + 2) {
    throw std::invalid_argument("vital curve parts sum to " + std::to_string(sum) + ", expected 2g+2 = " +
                                std::to_string(2 * genus + 2));
  }
  std::sort(parts_.begin(), parts_.end());
}

std::vector<VitalCurve> enumerate_vital_curves(int genus) {
  require_genus(genus);
  const int n = 2 * genus + 2;
  std::vector<VitalCurve> out;
  for (int a = 1; 4 * a <= n; ++a) {
    for (int b = a; a + 3 * b <= n; ++b) {
      for (int c = b; a + b + 2 * c <= n; ++c) {
        out.emplace_back(genus, std::array<int, 4>{a, b, c, n - a - b - c});
      }
    }
  }
  return out;
}

Rat intersect_labeled(const BoundaryDivisorClass& divisor, const std::array<int, 4>& labeled_parts) {
  const auto [a, b, c, d] = labeled_parts;
  return divisor.lookup(a + b) + divisor.lookup(b + c) + divisor.lookup(a + c) - divisor.lookup(a) -
         divisor.lookup(b) - divisor.lookup(c) - divisor.lookup(d);
}

Rat intersect(const BoundaryDivisorClass& divisor, const VitalCurve& curve) {
  if (divisor.genus() != curve.genus()) {
    throw std::invalid_argument("genus mismatch: divisor " + std::to_string(divisor.genus()) + ", curve " +
                                std::to_string(curve.genus()));
  }
  return intersect_labeled(divisor, curve.parts());
}

NefScanReport nef_scan(const BoundaryDivisorClass& divisor) {
  NefScanReport report;
  bool first = true;
  for (const auto& curve : enumerate_vital_curves(divisor.genus())) {
    Rat value = intersect(divisor, curve);
    if (first || value < report.minimum) report.minimum = value;
    first = false;
    if (value.sign() < 0) report.negative.push_back(curve);
    if (value.is_zero()) report.zero.push_back(curve);
  }
  return report;
}

}  // namespace logmmp
