#include "logmmp/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "logmmp/walls.hpp"

namespace logmmp {

namespace {

void require_b(int b) {
  if (b < 2) throw std::invalid_argument("b must be >= 2 (elliptic tails and bridges are excluded), got " + std::to_string(b));
}

void require_genus_for(Family family, int genus, int b) {
  const int min_genus = family == Family::tail ? b + 1 : b + 2;
  if (genus < min_genus) {
    throw std::invalid_argument("genus " + std::to_string(genus) + " too small for a genus " + std::to_string(b) + " " +
                                to_string(family) + "; need g >= " + std::to_string(min_genus));
  }
}

void require_m(const Rat& m) {
  if (m < Rat(1)) throw std::invalid_argument("Hilbert point degree m must be >= 1, got " + m.str());
}

/// Sparse vector over Q, sorted by index.
using SparseVector = std::vector<std::pair<int, Rat>>;

SparseVector axpy(const SparseVector& x, const Rat& a, const SparseVector& y) {
  // x - a*y
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(a * y[j].second));
      ++j;
    } else {
      Rat v = x[i].second - a * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental row echelon basis; rows are keyed by their leading index and
/// normalized to a leading 1.
class EchelonBasis {
 public:
  /// Adds v if it is independent of the rows so far. Returns whether it was added.
  bool insert(SparseVector v) {
    while (!v.empty()) {
      const int lead = v.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        const Rat inv = Rat(1) / v.front().second;
        for (auto& entry : v) entry.second *= inv;
        rows_.emplace(lead, std::move(v));
        return true;
      }
      v = axpy(v, v.front().second, it->second);
    }
    return false;
  }

 private:
  std::map<int, SparseVector> rows_;
};

void enumerate_monomials(int n, int m, ExponentVector& current, int position, std::vector<ExponentVector>& out) {
  if (position == n - 1) {
    current[static_cast<std::size_t>(position)] = m;
    out.push_back(current);
    return;
  }
  for (int e = m; e >= 0; --e) {
    current[static_cast<std::size_t>(position)] = e;
    enumerate_monomials(n, m - e, current, position + 1, out);
  }
  current[static_cast<std::size_t>(position)] = 0;
}

std::int64_t monomial_weight(const ExponentVector& exps, const std::vector<int>& weights) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) w += static_cast<std::int64_t>(exps[i]) * weights[i];
  return w;
}

}  // namespace

std::string to_string(Family f) { return f == Family::tail ? "tail" : "bridge"; }

Family parse_family(std::string_view name) {
  if (name == "tail") return Family::tail;
  if (name == "bridge") return Family::bridge;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected tail or bridge)");
}

MonomialChart::MonomialChart(int num_coords, std::vector<ChartComponent> components)
    : num_coords_(num_coords), components_(std::move(components)) {
  if (num_coords_ < 1 || components_.empty()) throw std::invalid_argument("chart needs coordinates and components");
  std::vector<bool> lives(static_cast<std::size_t>(num_coords_), false);
  for (const auto& comp : components_) {
    if (comp.exponents.size() != static_cast<std::size_t>(num_coords_)) {
      throw std::invalid_argument("chart component has the wrong number of coordinates");
    }
    std::vector<bool> used(static_cast<std::size_t>(comp.degree) + 1, false);
    for (int i = 0; i < num_coords_; ++i) {
      const auto& e = comp.exponents[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (*e < 0 || *e > comp.degree) throw std::invalid_argument("chart exponent outside 0..degree");
      if (used[static_cast<std::size_t>(*e)]) {
        throw std::invalid_argument("two coordinates share the exponent " + std::to_string(*e) + " on one component");
      }
      used[static_cast<std::size_t>(*e)] = true;
      lives[static_cast<std::size_t>(i)] = true;
    }
  }
  for (int i = 0; i < num_coords_; ++i) {
    if (!lives[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("coordinate " + std::to_string(i) + " vanishes on every component");
    }
  }
}

OnePS::OnePS(const MonomialChart& chart, std::vector<int> chart_weights, int external_weight, int external_count)
    : chart_weights_(std::move(chart_weights)), external_weight_(external_weight), external_count_(external_count) {
  if (chart_weights_.size() != static_cast<std::size_t>(chart.num_coords())) {
    throw std::invalid_argument("one weight per chart coordinate required");
  }
  if (external_count_ < 0) throw std::invalid_argument("negative external coordinate count");
  for (const auto& comp : chart.components()) {
    for (int i = 0; i < chart.num_coords(); ++i) {
      const auto& e = comp.exponents[static_cast<std::size_t>(i)];
      if (e && *e != chart_weights_[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("weight of coordinate " + std::to_string(i) + " differs from its t-exponent");
      }
    }
  }
}

std::int64_t OnePS::total_weight() const {
  std::int64_t sum = std::accumulate(chart_weights_.begin(), chart_weights_.end(), std::int64_t{0});
  return sum + static_cast<std::int64_t>(external_weight_) * external_count_;
}

int TestCurve::min_genus() const { return family == Family::tail ? b + 1 : b + 2; }

int TestCurve::external_coordinate_count(int genus) const {
  return family == Family::tail ? 3 * genus - 3 * b - 2 : 3 * genus - 3 * b - 4;
}

OnePS TestCurve::one_ps(int genus) const {
  require_genus_for(family, genus, b);
  return OnePS(chart, weights, external_weight, external_coordinate_count(genus));
}

TestCurve tail_chart(int b) {
  require_b(b);
  const int n = 3 * b - 1;
  ChartComponent comp{4 * b - 2, std::vector<std::optional<int>>(static_cast<std::size_t>(n))};
  std::vector<int> weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int e = i <= b ? 2 * i : i + b;
    comp.exponents[static_cast<std::size_t>(i)] = e;
    weights[static_cast<std::size_t>(i)] = e;
  }
  return TestCurve{Family::tail, b, MonomialChart(n, {std::move(comp)}), std::move(weights), 4 * b - 2};
}

TestCurve bridge_chart(int b) {
  require_b(b);
  const int n = 3 * b + 1;
  ChartComponent first{2 * b, std::vector<std::optional<int>>(static_cast<std::size_t>(n))};
  ChartComponent second{2 * b, std::vector<std::optional<int>>(static_cast<std::size_t>(n))};
  std::vector<int> weights(static_cast<std::size_t>(n));
  auto set = [&](ChartComponent& comp, int coord, int e) {
    comp.exponents[static_cast<std::size_t>(coord)] = e;
    weights[static_cast<std::size_t>(coord)] = e;
  };
  for (int k = 0; k <= b; ++k) {
    set(first, k, k);
    set(second, k, k);
  }
  for (int k = b + 1; k <= 2 * b - 1; ++k) set(first, k, k);
  for (int k = 2 * b; k <= 3 * b - 2; ++k) set(second, k, k - b + 1);
  set(first, 3 * b - 1, 2 * b);
  set(second, 3 * b, 2 * b);
  return TestCurve{Family::bridge, b, MonomialChart(n, {std::move(first), std::move(second)}), std::move(weights),
                   2 * b};
}

TestCurve make_chart(Family family, int b) { return family == Family::tail ? tail_chart(b) : bridge_chart(b); }

Rat tail_total_weight_closed_form(int b, int genus) {
  const long bb = b;
  const long g = genus;
  return Rat((4 * bb - 1) * (4 * bb - 2) / 2 - bb * bb + (4 * bb - 2) * (3 * g - 3 * bb - 2));
}

Rat bridge_total_weight_closed_form(int b, int genus) {
  const long bb = b;
  const long g = genus;
  return Rat((2 * bb + 1) * bb + (bb + 1) * bb / 2 + bb * bb + 2 * bb * (3 * g - 3 * bb - 4));
}

std::vector<ExponentVector> standard_monomials(const MonomialChart& chart, const OnePS& rho, int m,
                                               TieBreak tie_break) {
  if (m < 1) throw std::invalid_argument("monomial degree m must be >= 1");
  const int n = chart.num_coords();
  const auto& weights = rho.chart_weights();

  std::vector<ExponentVector> monomials;
  ExponentVector scratch(static_cast<std::size_t>(n), 0);
  enumerate_monomials(n, m, scratch, 0, monomials);

  struct Keyed {
    std::int64_t weight;
    ExponentVector exps;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(monomials.size());
  for (auto& e : monomials) keyed.push_back({monomial_weight(e, weights), std::move(e)});

  std::sort(keyed.begin(), keyed.end(), [tie_break](const Keyed& x, const Keyed& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    if (tie_break == TieBreak::low_index_first) return x.exps < y.exps;
    return std::lexicographical_compare(x.exps.rbegin(), x.exps.rend(), y.exps.rbegin(), y.exps.rend());
  });

  // Restrictions live in the span of t-monomials of each component; component
  // c contributes the block [offset[c], offset[c] + m * degree_c].
  std::vector<int> offset;
  int next = 0;
  for (const auto& comp : chart.components()) {
    offset.push_back(next);
    next += m * comp.degree + 1;
  }

  EchelonBasis basis;
  std::vector<ExponentVector> standard;
  for (auto& entry : keyed) {
    SparseVector v;
    for (std::size_t c = 0; c < chart.components().size(); ++c) {
      const auto& comp = chart.components()[c];
      int t_exp = 0;
      bool vanishes = false;
      for (int i = 0; i < n && !vanishes; ++i) {
        const int power = entry.exps[static_cast<std::size_t>(i)];
        if (power == 0) continue;
        const auto& e = comp.exponents[static_cast<std::size_t>(i)];
        if (!e) {
          vanishes = true;
        } else {
          t_exp += power * *e;
        }
      }
      if (!vanishes) v.emplace_back(offset[c] + t_exp, Rat(1));
    }
    if (v.empty()) continue;
    if (basis.insert(std::move(v))) standard.push_back(std::move(entry.exps));
  }
  return standard;
}

OracleResult standard_monomial_weights(const MonomialChart& chart, const OnePS& rho, int m, TieBreak tie_break) {
  OracleResult out{0, 0};
  for (const auto& e : standard_monomials(chart, rho, m, tie_break)) {
    ++out.count;
    out.weight_sum += monomial_weight(e, rho.chart_weights());
  }
  return out;
}

Poly tail_weight_polynomial(int b) {
  require_b(b);
  const long bb = b;
  return Poly(Var::m, {Rat(-bb * bb), Rat(2 * bb - 1), Rat(8 * bb * bb - 8 * bb + 2)});
}

Poly bridge_weight_polynomial(int b) {
  require_b(b);
  const long bb = b;
  return Poly(Var::m, {Rat(-(bb + 1) * bb / 2), Rat(2 * bb), Rat(4 * bb * bb)});
}

Rat tail_weight_closed_form(int b, const Rat& m) { return tail_weight_polynomial(b)(m); }

Rat bridge_weight_closed_form(int b, const Rat& m) { return bridge_weight_polynomial(b)(m); }

Rat standard_count_closed_form(Family family, int b, const Rat& m) {
  require_b(b);
  if (family == Family::tail) return Rat(4L * b - 2) * m + Rat(1 - b);
  return Rat(4L * b) * m + Rat(1 - b);
}

Rat external_section_count(Family family, int genus, int b, const Rat& m) {
  require_b(b);
  require_genus_for(family, genus, b);
  const Rat base = (Rat(4) * m - Rat(1)) * Rat(genus - b - 1);
  if (family == Family::tail) return base + Rat(2) * m - Rat(1);
  return base - Rat(1);
}

Rat external_weight_tail(int genus, int b, const Rat& m) {
  return Rat(4L * b - 2) * m * external_section_count(Family::tail, genus, b, m);
}

Rat external_weight_bridge(int genus, int b, const Rat& m) {
  return Rat(2L * b) * m * external_section_count(Family::bridge, genus, b, m);
}

Rat hilbert_polynomial(int genus, const Rat& m) { return (Rat(4) * m - Rat(1)) * Rat(genus - 1); }

Rat assemble_mu(const TestCurve& curve, int genus, const Rat& m, const Rat& standard_weight) {
  require_m(m);
  const OnePS rho = curve.one_ps(genus);
  const Rat average = m * hilbert_polynomial(genus, m) / Rat(3L * genus - 3) * Rat(rho.total_weight());
  const Rat external = curve.family == Family::tail ? external_weight_tail(genus, curve.b, m)
                                                    : external_weight_bridge(genus, curve.b, m);
  return average - standard_weight - external;
}

Rat mu_tail(int genus, int b, const Rat& m) {
  return assemble_mu(tail_chart(b), genus, m, tail_weight_closed_form(b, m));
}

Rat mu_bridge(int genus, int b, const Rat& m) {
  return assemble_mu(bridge_chart(b), genus, m, bridge_weight_closed_form(b, m));
}

Rat mu(Family family, int genus, int b, const Rat& m) {
  return family == Family::tail ? mu_tail(genus, b, m) : mu_bridge(genus, b, m);
}

Poly mu_tail_polynomial(int b) {
  require_b(b);
  const long bb = b;
  const Poly m_minus_1(Var::m, {Rat(-1), Rat(1)});
  return Rat(1, 3) * m_minus_1 * Poly(Var::m, {Rat(-3 * bb * bb), Rat(4 * bb * bb - 8 * bb + 2)});
}

Poly mu_bridge_polynomial(int b) {
  require_b(b);
  const long bb = b;
  const Poly m_minus_1(Var::m, {Rat(-1), Rat(1)});
  return Rat(1, 6) * m_minus_1 * Poly(Var::m, {Rat(-3 * bb * (bb + 1)), Rat(4 * bb * (bb - 1))});
}

namespace {

int tail_b_of(int j) {
  if (j < 5 || j % 2 == 0) throw std::invalid_argument("tail walls need odd j >= 5, got " + std::to_string(j));
  return (j - 1) / 2;
}

int bridge_b_of(int j) {
  if (j < 6 || j % 2 == 1) throw std::invalid_argument("bridge walls need even j >= 6, got " + std::to_string(j));
  return (j - 2) / 2;
}

/// leading (17 alpha - 8)(alpha - alpha_j) / (scale (7 - 10 alpha)^2)
RatFunc factored_alpha_form(const Rat& leading, const Rat& scale, int j) {
  const Poly alpha = Poly::identity(Var::alpha);
  const Poly numerator = leading * (Rat(17) * alpha - Rat(8)) * (alpha - critical_alpha(j));
  const Poly seven_minus = Poly::constant(Var::alpha, Rat(7)) - Rat(10) * alpha;
  return RatFunc(numerator, scale * seven_minus * seven_minus);
}

}  // namespace

RatFunc mu_alpha_tail(int j) {
  tail_b_of(j);
  const long jj = j;
  return factored_alpha_form(Rat(8 * jj * jj - 8 * jj - 4), Rat(8), j);
}

RatFunc mu_alpha_bridge(int j) {
  bridge_b_of(j);
  const long jj = j;
  return factored_alpha_form(Rat(jj * jj - jj - 2), Rat(2), j);
}

RatFunc mu_alpha_tail_by_substitution(int j) { return compose(mu_tail_polynomial(tail_b_of(j)), m_of_alpha_function()); }

RatFunc mu_alpha_bridge_by_substitution(int j) {
  return compose(mu_bridge_polynomial(bridge_b_of(j)), m_of_alpha_function());
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable:
      return "stable";
    case Stability::strictly_semistable:
      return "strictly_semistable";
    case Stability::unstable:
      return "unstable";
  }
  return "unknown";
}

StabilityVerdict classify(const Rat& mu) {
  const int s = mu.sign();
  return {mu, s > 0 ? Stability::stable : (s == 0 ? Stability::strictly_semistable : Stability::unstable)};
}

std::vector<int> versal_weights_tail(int b) {
  require_b(b);
  std::vector<int> out;
  for (int i = 0; i <= 2 * b - 1; ++i) out.push_back(4 * b + 2 - 2 * i);
  return out;
}

}  // namespace logmmp
