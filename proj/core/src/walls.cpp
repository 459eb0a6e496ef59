#include "logmmp/walls.hpp"

#include <stdexcept>
#include <string>

namespace logmmp {

namespace {

void require_wall_index(int genus, int j) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
  if (j < 3 || j > genus + 1) {
    throw std::out_of_range("wall index j = " + std::to_string(j) + " outside 3.." + std::to_string(genus + 1));
  }
}

}  // namespace

Rat wall_coefficient(int genus, int j, const Rat& alpha) {
  require_wall_index(genus, j);
  const auto l = make_l_alpha(genus, alpha);
  return choose2(j) * l.coeff(2) - l.coeff(j);
}

Poly wall_polynomial(int genus, int j) {
  require_wall_index(genus, j);
  return choose2(j) * l_alpha_coefficient(genus, 2) - l_alpha_coefficient(genus, j);
}

Poly wall_polynomial_simplified(int j) {
  if (j < 3) throw std::out_of_range("wall index j must be >= 3");
  const long jj = j;
  if (j % 2 == 1) {
    return Poly(Var::alpha, {-Rat(3 * jj * jj + 10 * jj - 21, 8), Rat(jj * (jj - 1)) - Rat(1, 2)});
  }
  return Rat(jj - 2) * Poly(Var::alpha, {-(Rat(3 * jj, 8) + Rat(2)), Rat(jj + 1)});
}

Rat critical_alpha(int j) {
  if (j < 2) throw std::out_of_range("critical values start at j = 2, got " + std::to_string(j));
  const long jj = j;
  if (j == 2) return Rat(1);
  if (j % 2 == 1) return Rat(3 * jj * jj + 10 * jj - 21, 8 * jj * jj - 8 * jj - 4);
  return Rat(3 * jj + 16, 8 * jj + 8);
}

BoundaryDivisorClass discrepancy_step(const BoundaryDivisorClass& previous, int j) {
  require_wall_index(previous.genus(), j);
  const Rat& r2 = previous.coeff(2);
  for (int k = 3; k < j; ++k) {
    if (previous.coeff(k) != choose2(k) * r2) {
      throw std::invalid_argument("discrepancy_step(j = " + std::to_string(j) + "): coefficient at B_" +
                                  std::to_string(k) + " has not been updated yet");
    }
  }
  const Rat c_j = choose2(j) * r2 - previous.coeff(j);
  return previous + c_j * BoundaryDivisorClass::unit(previous.genus(), j);
}

BoundaryDivisorClass pullback_class(int genus, const Rat& alpha, int j) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
  if (j < 2 || j > genus + 1) {
    throw std::out_of_range("pullback level j = " + std::to_string(j) + " outside 2.." + std::to_string(genus + 1));
  }
  BoundaryDivisorClass out = make_l_alpha(genus, alpha);
  const Rat r2 = out.coeff(2);
  for (int k = 2; k <= j; ++k) out.set_coeff(k, choose2(k) * r2);
  return out;
}

bool WallTable::is_strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].alpha < rows[i - 1].alpha)) return false;
  }
  return true;
}

WallTable build_wall_table(int genus) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
  WallTable table{genus, {}};
  for (int j = 3; j <= genus + 1; ++j) {
    Rat alpha = critical_alpha(j);
    table.rows.push_back(WallRow{j, alpha, pullback_class(genus, alpha, j)});
  }
  return table;
}

Rat m_of_alpha(const Rat& alpha) {
  const Rat den = Rat(2) * (Rat(7) - Rat(10) * alpha);
  if (den.is_zero()) throw std::domain_error("m_of_alpha: pole at alpha = 7/10");
  return Rat(3) * (Rat(2) - alpha) / den;
}

Rat alpha_of_m(const Rat& m) {
  const Rat den = Rat(20) * m - Rat(3);
  if (den.is_zero()) throw std::domain_error("alpha_of_m: pole at m = 3/20");
  return (Rat(14) * m - Rat(6)) / den;
}

RatFunc m_of_alpha_function() {
  return RatFunc(Poly(Var::alpha, {Rat(6), Rat(-3)}), Poly(Var::alpha, {Rat(14), Rat(-20)}));
}

bool in_stability_window(const Rat& alpha) { return Rat(8, 17) < alpha && alpha < Rat(7, 10); }

LinearizationClass hilbert_linearization(int nu, const Rat& m) {
  if (nu < 1) throw std::invalid_argument("nu must be >= 1");
  const Rat n(nu);
  const Rat scale = m - Rat(1);
  return {scale * (Rat(6) * m * n * n - Rat(2) * m * n - Rat(2) * n + Rat(1)), -scale * (m * n * n / Rat(2))};
}

LinearizationClass log_canonical_pullback(const Rat& alpha) { return {Rat(13), -(Rat(2) - alpha)}; }

std::vector<Rat> symmetric_git_class(int genus) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
  std::vector<Rat> out;
  for (long k = 2; k <= genus + 1; ++k) out.emplace_back(2 * k * (k - 1), 2L * genus + 1);
  return out;
}

std::vector<Rat> binomial_vector(int genus) {
  std::vector<Rat> out;
  for (long k = 2; k <= genus + 1; ++k) out.push_back(choose2(k));
  return out;
}

std::optional<Rat> proportionality_check(const std::vector<Rat>& v, const std::vector<Rat>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("proportionality_check: length mismatch");
  auto is_zero = [](const std::vector<Rat>& x) {
    for (const auto& c : x) {
      if (!c.is_zero()) return false;
    }
    return true;
  };
  const bool v_zero = is_zero(v);
  const bool w_zero = is_zero(w);
  if (v_zero && w_zero) throw std::invalid_argument("proportionality_check: both vectors are zero");
  if (w_zero) return std::nullopt;
  std::optional<Rat> ratio;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) {
      if (!v[i].is_zero()) return std::nullopt;
      continue;
    }
    Rat t = v[i] / w[i];
    if (ratio && *ratio != t) return std::nullopt;
    ratio = t;
  }
  return ratio;
}

}  // namespace logmmp
