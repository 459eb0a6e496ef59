#include "logmmp/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "logmmp/divisors.hpp"
#include "logmmp/hilbert.hpp"
#include "logmmp/walls.hpp"

namespace logmmp {

namespace {

class Checker {
 public:
  explicit Checker(CheckResult& result) : result_(result) {}

  bool failed() const { return !result_.passed; }

  /// Records one case. The message is only built on failure.
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    if (failed()) return;
    ++result_.cases;
    if (!ok) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

 private:
  CheckResult& result_;
};

struct Ranges {
  int max_wall_genus;
  int max_bracket_j;
  int max_ray_genus;
  int max_oracle_b;
  int max_oracle_m;
  int max_alpha_j;
};

Ranges ranges_for(bool deep) {
  if (deep) return {30, 40, 16, 6, 7, 41};
  return {16, 20, 10, 5, 6, 15};
}

std::string s(long v) { return std::to_string(v); }

/// Number of partitions of n into exactly k positive parts.
std::int64_t partitions_into(int n, int k, std::map<std::pair<int, int>, std::int64_t>& memo) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < k) return 0;
  auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t v = partitions_into(n - 1, k - 1, memo) + partitions_into(n - k, k, memo);
  memo.emplace(key, v);
  return v;
}

void check_critical_values(Checker& c) {
  const std::array<std::pair<int, Rat>, 5> expected{
      {{2, Rat(1)}, {3, Rat(9, 11)}, {4, Rat(7, 10)}, {5, Rat(2, 3)}, {6, Rat(17, 28)}}};
  for (const auto& [j, value] : expected) {
    c.expect(critical_alpha(j) == value,
             [&] { return "critical_alpha(" + s(j) + ") = " + critical_alpha(j).str() + ", expected " + value.str(); });
  }
}

void check_wall_roots(Checker& c, const Ranges& r) {
  for (int g = 2; g <= r.max_wall_genus; ++g) {
    for (int j = 3; j <= g + 1; ++j) {
      const Poly wall = wall_polynomial(g, j);
      c.expect(linear_root(wall) == critical_alpha(j),
               [&] { return "root of c_" + s(j) + " at g=" + s(g) + " is " + linear_root(wall).str(); });
      c.expect(wall == wall_polynomial_simplified(j),
               [&] { return "c_" + s(j) + " at g=" + s(g) + " = " + wall.str() + " is not the g-free form"; });
      for (const Rat& alpha : {Rat(0), Rat(1), Rat(2, 3), Rat(-5, 7)}) {
        c.expect(wall_coefficient(g, j, alpha) == wall(alpha),
                 [&] { return "wall_coefficient(" + s(g) + "," + s(j) + "," + alpha.str() + ") disagrees"; });
      }
    }
  }
}

void check_bracket_identity(Checker& c, const Ranges& r) {
  for (long j = 3; j <= r.max_bracket_j; ++j) {
    for (long a = 1; a < j; ++a) {
      for (long b = 1; a + b < j; ++b) {
        const Rat lhs = choose2(a + b) + choose2(j - a) + choose2(j - b) - choose2(a) - choose2(b) - choose2(j - a - b);
        c.expect(lhs == choose2(j), [&] { return "bracket identity fails at j=" + s(j) + " a=" + s(a) + " b=" + s(b); });
      }
    }
  }
}

void check_extremal_rays(Checker& c, const Ranges& r) {
  for (int g = 2; g <= r.max_ray_genus; ++g) {
    for (int j = 3; j <= g + 1; ++j) {
      const auto divisor = pullback_class(g, critical_alpha(j), j - 1);
      for (int a = 1; a < j; ++a) {
        for (int b = 1; a + b < j; ++b) {
          const VitalCurve curve(g, {a, b, j - a - b, 2 * g + 2 - j});
          c.expect(intersect(divisor, curve).is_zero(), [&] {
            return "L^[" + s(j - 1) + "] at alpha_" + s(j) + " pairs to " + intersect(divisor, curve).str() +
                   " with {" + s(a) + "," + s(b) + "," + s(j - a - b) + "," + s(2 * g + 2 - j) + "}, g=" + s(g);
          });
        }
      }
    }
  }
}

void check_discrepancy_paths(Checker& c, const Ranges& r) {
  for (int g = 2; g <= r.max_ray_genus; ++g) {
    for (const Rat& alpha : {Rat(1), Rat(7, 10), Rat(3, 5), Rat(-2)}) {
      auto iterated = make_l_alpha(g, alpha);
      for (int j = 3; j <= g + 1; ++j) {
        iterated = discrepancy_step(iterated, j);
        c.expect(iterated == pullback_class(g, alpha, j),
                 [&] { return "iterated discrepancy differs from closed form at g=" + s(g) + " j=" + s(j); });
      }
    }
  }
}

void check_final_model(Checker& c, const Ranges& r) {
  for (int g = 2; g <= r.max_wall_genus; ++g) {
    const auto binomials = binomial_vector(g);
    for (const Rat& alpha : {Rat(1), Rat(2, 3), critical_alpha(g + 1)}) {
      const auto ratio = proportionality_check(pullback_class(g, alpha, g + 1).coeffs(), binomials);
      c.expect(ratio && *ratio == make_l_alpha(g, alpha).coeff(2),
               [&] { return "L^[g+1] is not r_2 * C(k,2) at g=" + s(g) + " alpha=" + alpha.str(); });
    }
    const auto git_ratio = proportionality_check(symmetric_git_class(g), binomials);
    c.expect(git_ratio && *git_ratio == Rat(4, 2L * g + 1),
             [&] { return "symmetric GIT class is not 4/(2g+1) * C(k,2) at g=" + s(g); });
  }
}

void check_linearization(Checker& c) {
  for (long mm = 2; mm <= 40; ++mm) {
    const Rat m(mm);
    const auto hilb = hilbert_linearization(2, m);
    const auto canon = log_canonical_pullback(alpha_of_m(m));
    const auto ratio = proportionality_check({hilb.lambda, hilb.delta}, {canon.lambda, canon.delta});
    c.expect(ratio && ratio->sign() > 0,
             [&] { return "Hilbert linearization at nu=2, m=" + s(mm) + " is not a positive multiple"; });
  }
}

void check_alpha_m(Checker& c) {
  for (long p = -30; p <= 30; ++p) {
    const Rat alpha(p, 17);
    if (alpha == Rat(7, 10)) continue;
    c.expect(alpha_of_m(m_of_alpha(alpha)) == alpha, [&] { return "round trip fails at alpha=" + alpha.str(); });
  }
  c.expect(m_of_alpha(Rat(2, 3)) == Rat(6), [] { return "m(2/3) != 6"; });
  c.expect(m_of_alpha(Rat(17, 28)) == Rat(9, 4), [] { return "m(17/28) != 9/4"; });
  // order preserving on the window
  Rat previous = m_of_alpha(Rat(8, 17) + Rat(1, 10000));
  for (long k = 2; k < 100; ++k) {
    const Rat alpha = Rat(8, 17) + (Rat(7, 10) - Rat(8, 17)) * Rat(k, 100);
    const Rat m = m_of_alpha(alpha);
    c.expect(m > previous && m > Rat(1), [&] { return "m(alpha) not increasing at alpha=" + alpha.str(); });
    previous = m;
  }
}

void check_vital_curves(Checker& c, const Ranges& r) {
  std::map<std::pair<int, int>, std::int64_t> memo;
  for (int g = 2; g <= r.max_ray_genus; ++g) {
    const auto curves = enumerate_vital_curves(g);
    c.expect(static_cast<std::int64_t>(curves.size()) == partitions_into(2 * g + 2, 4, memo),
             [&] { return "vital curve count wrong at g=" + s(g); });
    const auto divisor = make_l_alpha(g, Rat(3, 4)) + Rat(5) * BoundaryDivisorClass::unit(g, g + 1);
    for (const auto& curve : curves) {
      auto labels = curve.parts();
      const Rat reference = intersect(divisor, curve);
      do {
        c.expect(intersect_labeled(divisor, labels) == reference,
                 [&] { return "pairing depends on labeling for " + s(labels[0]) + "," + s(labels[1]) + "," +
                              s(labels[2]) + "," + s(labels[3]); });
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  }
}

void check_oracle(Checker& c, const Ranges& r, Family family, const std::function<Rat(int, const Rat&)>& closed) {
  for (int b = 2; b <= r.max_oracle_b; ++b) {
    const TestCurve curve = make_chart(family, b);
    const OnePS rho = curve.one_ps(curve.min_genus());
    for (int m = 1; m <= r.max_oracle_m; ++m) {
      const OracleResult got = standard_monomial_weights(curve.chart, rho, m);
      c.expect(Rat(got.weight_sum) == closed(b, Rat(m)) && Rat(got.count) == standard_count_closed_form(family, b, Rat(m)),
               [&] {
                 return to_string(family) + " b=" + s(b) + " m=" + s(m) + ": oracle (" + s(got.count) + ", " +
                        s(got.weight_sum) + ") vs closed form weight " + closed(b, Rat(m)).str();
               });
    }
  }
}

void check_tie_break(Checker& c) {
  for (Family family : {Family::tail, Family::bridge}) {
    for (int b = 2; b <= 3; ++b) {
      const TestCurve curve = make_chart(family, b);
      const OnePS rho = curve.one_ps(curve.min_genus());
      for (int m = 1; m <= 4; ++m) {
        c.expect(standard_monomial_weights(curve.chart, rho, m, TieBreak::low_index_first) ==
                     standard_monomial_weights(curve.chart, rho, m, TieBreak::high_index_first),
                 [&] { return to_string(family) + " b=" + s(b) + " m=" + s(m) + " depends on the tie-break"; });
      }
    }
  }
}

void check_total_weights(Checker& c, const Ranges& r) {
  for (int b = 2; b <= r.max_oracle_b + 3; ++b) {
    for (int g = b + 2; g <= b + 8; ++g) {
      c.expect(Rat(tail_chart(b).one_ps(g).total_weight()) == tail_total_weight_closed_form(b, g),
               [&] { return "tail total weight r differs at b=" + s(b) + " g=" + s(g); });
      c.expect(Rat(bridge_chart(b).one_ps(g).total_weight()) == bridge_total_weight_closed_form(b, g),
               [&] { return "bridge total weight r differs at b=" + s(b) + " g=" + s(g); });
      for (long m = 1; m <= 6; ++m) {
        for (Family family : {Family::tail, Family::bridge}) {
          c.expect(standard_count_closed_form(family, b, Rat(m)) + external_section_count(family, g, b, Rat(m)) ==
                       hilbert_polynomial(g, Rat(m)),
                   [&] { return to_string(family) + " section counts do not add up at b=" + s(b); });
        }
      }
    }
  }
}

void check_mu_closed_forms(Checker& c, const Ranges& r) {
  for (int b = 2; b <= r.max_oracle_b; ++b) {
    for (long mm = 2; mm <= r.max_oracle_m; ++mm) {
      const Rat m(mm);
      for (int g = b + 1; g <= b + 6; ++g) {
        c.expect(mu_tail(g, b, m) == mu_tail_polynomial(b)(m),
                 [&] { return "mu_tail(" + s(g) + "," + s(b) + "," + s(mm) + ") = " + mu_tail(g, b, m).str(); });
      }
      for (int g = b + 2; g <= b + 7; ++g) {
        c.expect(mu_bridge(g, b, m) == mu_bridge_polynomial(b)(m),
                 [&] { return "mu_bridge(" + s(g) + "," + s(b) + "," + s(mm) + ") = " + mu_bridge(g, b, m).str(); });
      }
    }
  }
}

void check_alpha_forms(Checker& c, const Ranges& r) {
  for (int j = 5; j <= r.max_alpha_j; j += 2) {
    c.expect(ratfunc_equal(mu_alpha_tail(j), mu_alpha_tail_by_substitution(j)),
             [&] { return "tail alpha-form differs from substitution at j=" + s(j); });
    c.expect(mu_alpha_tail(j)(critical_alpha(j)).is_zero(), [&] { return "tail wall misses alpha_" + s(j); });
  }
  for (int j = 6; j <= r.max_alpha_j; j += 2) {
    c.expect(ratfunc_equal(mu_alpha_bridge(j), mu_alpha_bridge_by_substitution(j)),
             [&] { return "bridge alpha-form differs from substitution at j=" + s(j); });
    c.expect(mu_alpha_bridge(j)(critical_alpha(j)).is_zero(), [&] { return "bridge wall misses alpha_" + s(j); });
  }
}

void check_semistable_walls(Checker& c) {
  for (int g = 3; g <= 9; ++g) {
    c.expect(mu_tail(g, 2, Rat(6)).is_zero(), [&] { return "mu_tail(" + s(g) + ", 2, 6) != 0"; });
  }
  for (int g = 4; g <= 9; ++g) {
    c.expect(mu_bridge(g, 2, Rat(9, 4)).is_zero(), [&] { return "mu_bridge(" + s(g) + ", 2, 9/4) != 0"; });
  }
}

void check_sign_schedule(Checker& c, const Ranges& r) {
  const Rat step(1, 1000);
  auto run = [&](int j, const RatFunc& f) {
    const Rat above = critical_alpha(j) + step;
    const Rat below = critical_alpha(j) - step;
    if (!in_stability_window(above) || !in_stability_window(below)) return;
    c.expect(classify(f(above)).classification == Stability::stable &&
                 classify(f(below)).classification == Stability::unstable &&
                 classify(mirror_mu(f(above))).classification == Stability::unstable &&
                 classify(mirror_mu(f(below))).classification == Stability::stable,
             [&] { return "sign schedule broken around alpha_" + s(j); });
  };
  for (int j = 5; j <= r.max_alpha_j; j += 2) run(j, mu_alpha_tail(j));
  for (int j = 6; j <= r.max_alpha_j; j += 2) run(j, mu_alpha_bridge(j));
}

void check_versal(Checker& c, const Ranges& r) {
  for (int b = 2; b <= r.max_alpha_j; ++b) {
    const auto w = versal_weights_tail(b);
    c.expect(w.size() == static_cast<std::size_t>(2 * b) && *std::min_element(w.begin(), w.end()) == 4,
             [&] { return "versal weights wrong at b=" + s(b); });
  }
}

void check_monotone_walls(Checker& c) {
  for (int j = 2; j < 15; ++j) {
    c.expect(critical_alpha(j + 1) < critical_alpha(j), [&] { return "alpha_" + s(j + 1) + " >= alpha_" + s(j); });
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  const Ranges r = ranges_for(options.deep);
  const std::function<Rat(int, const Rat&)> tail =
      options.tail_weight ? options.tail_weight : [](int b, const Rat& m) { return tail_weight_closed_form(b, m); };
  const std::function<Rat(int, const Rat&)> bridge =
      options.bridge_weight ? options.bridge_weight : [](int b, const Rat& m) { return bridge_weight_closed_form(b, m); };

  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> groups{
      {"critical_values", check_critical_values},
      {"critical_values_monotone", check_monotone_walls},
      {"wall_roots", [&](Checker& c) { check_wall_roots(c, r); }},
      {"bracket_identity", [&](Checker& c) { check_bracket_identity(c, r); }},
      {"vital_curves", [&](Checker& c) { check_vital_curves(c, r); }},
      {"extremal_ray_vanishing", [&](Checker& c) { check_extremal_rays(c, r); }},
      {"discrepancy_paths", [&](Checker& c) { check_discrepancy_paths(c, r); }},
      {"final_model_proportionality", [&](Checker& c) { check_final_model(c, r); }},
      {"alpha_m_correspondence", check_alpha_m},
      {"linearization_proportionality", check_linearization},
      {"total_weights", [&](Checker& c) { check_total_weights(c, r); }},
      {"tail_weight_closed_form", [&](Checker& c) { check_oracle(c, r, Family::tail, tail); }},
      {"bridge_weight_closed_form", [&](Checker& c) { check_oracle(c, r, Family::bridge, bridge); }},
      {"oracle_tie_break", check_tie_break},
      {"mu_closed_forms", [&](Checker& c) { check_mu_closed_forms(c, r); }},
      {"alpha_form_identities", [&](Checker& c) { check_alpha_forms(c, r); }},
      {"wall_semistability", check_semistable_walls},
      {"sign_schedule", [&](Checker& c) { check_sign_schedule(c, r); }},
      {"versal_weights", [&](Checker& c) { check_versal(c, r); }},
  };

  VerifyReport report;
  for (const auto& [name, run] : groups) {
    CheckResult result;
    result.name = name;
    Checker checker(result);
    try {
      run(checker);
    } catch (const std::exception& e) {
      result.passed = false;
      result.failure = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace logmmp
