#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "generators.hpp"
#include "logmmp/divisors.hpp"

using logmmp::BoundaryDivisorClass;
using logmmp::Rat;
using logmmp::VitalCurve;

namespace {

/// Generate-and-filter: every ordered quadruple of positive parts summing to
/// 2g+2, sorted and deduplicated.
std::set<std::array<int, 4>> brute_force_partitions(int genus) {
  const int n = 2 * genus + 2;
  std::set<std::array<int, 4>> out;
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      for (int c = 1; c < n; ++c) {
        for (int d = 1; d < n; ++d) {
          if (a + b + c + d != n) continue;
          std::array<int, 4> p{a, b, c, d};
          std::sort(p.begin(), p.end());
          out.insert(p);
        }
      }
    }
  }
  return out;
}

BoundaryDivisorClass random_class(std::mt19937& rng, int genus) {
  BoundaryDivisorClass d(genus);
  for (int k = 2; k <= genus + 1; ++k) d.set_coeff(k, logmmp::testing::random_rat(rng, 20));
  return d;
}

}  // namespace

TEST(FoldIndex, CanonicalIndex) {
  EXPECT_EQ(logmmp::fold_index(3, 5), 3);
  EXPECT_EQ(logmmp::fold_index(3, 4), 4);
  EXPECT_EQ(logmmp::fold_index(3, 8), 0);
  EXPECT_THROW(logmmp::fold_index(3, 9), std::out_of_range);
  EXPECT_THROW(logmmp::fold_index(3, -1), std::out_of_range);
}

TEST(FoldIndex, LookupBelowTwoIsZero) {
  const auto d = logmmp::make_l_alpha(3, Rat(1));
  EXPECT_EQ(d.lookup(1), Rat(0));
  EXPECT_EQ(d.lookup(7), Rat(0));
  EXPECT_EQ(d.lookup(0), Rat(0));
  EXPECT_EQ(d.lookup(5), d.coeff(3));
}

TEST(LAlpha, DisplayedCoefficients) {
  const auto g2 = logmmp::make_l_alpha(2, Rat(1));
  EXPECT_EQ(g2.coeff(2), Rat(3, 5));
  EXPECT_EQ(g2.coeff(3), Rat(4, 5));
  EXPECT_EQ(logmmp::make_l_alpha(3, Rat(7, 10)).coeff(2), Rat(13, 70));
  const auto at_two = logmmp::make_l_alpha(2, Rat(2));
  EXPECT_EQ(at_two.coeff(2), Rat(13, 5));
  EXPECT_EQ(at_two.coeff(3), Rat(13, 10));
  EXPECT_THROW(logmmp::make_l_alpha(1, Rat(1)), std::invalid_argument);
}

TEST(LAlpha, SymbolicCoefficientsAgreeWithNumeric) {
  for (int g = 2; g <= 12; ++g) {
    for (const Rat& alpha : {Rat(0), Rat(9, 11), Rat(-3, 4)}) {
      const auto d = logmmp::make_l_alpha(g, alpha);
      for (int k = 2; k <= g + 1; ++k) {
        const auto p = logmmp::l_alpha_coefficient(g, k);
        EXPECT_EQ(p.degree(), 1);
        EXPECT_EQ(p(alpha), d.coeff(k));
      }
    }
  }
}

TEST(BoundaryDivisorClass, ShapeIsChecked) {
  EXPECT_THROW(BoundaryDivisorClass(3, {Rat(1), Rat(2)}), std::invalid_argument);
  BoundaryDivisorClass d(3);
  EXPECT_THROW(d.coeff(1), std::out_of_range);
  EXPECT_THROW(d.coeff(5), std::out_of_range);
  EXPECT_EQ(d.coeffs().size(), 3u);
}

TEST(VitalCurves, GenusTwoHasExactlyTwo) {
  const auto curves = logmmp::enumerate_vital_curves(2);
  ASSERT_EQ(curves.size(), 2u);
  EXPECT_EQ(curves[0].parts(), (std::array<int, 4>{1, 1, 1, 3}));
  EXPECT_EQ(curves[1].parts(), (std::array<int, 4>{1, 1, 2, 2}));
  EXPECT_THROW(VitalCurve(2, {1, 1, 1, 4}), std::invalid_argument);
  EXPECT_THROW(VitalCurve(2, {0, 2, 2, 2}), std::invalid_argument);
}

TEST(VitalCurves, MatchGenerateAndFilter) {
  for (int g = 2; g <= 8; ++g) {
    const auto expected = brute_force_partitions(g);
    const auto curves = logmmp::enumerate_vital_curves(g);
    ASSERT_EQ(curves.size(), expected.size()) << "g=" << g;
    std::set<std::array<int, 4>> got;
    for (const auto& c : curves) got.insert(c.parts());
    EXPECT_EQ(got, expected);
  }
}

TEST(Intersect, HandComputedPairings) {
  EXPECT_EQ(logmmp::intersect(BoundaryDivisorClass::unit(3, 4), VitalCurve(3, {1, 1, 2, 4})), Rat(-1));
  EXPECT_EQ(logmmp::intersect(BoundaryDivisorClass::unit(3, 2), VitalCurve(3, {1, 1, 1, 5})), Rat(3));
  for (const auto& c : logmmp::enumerate_vital_curves(3)) {
    EXPECT_EQ(logmmp::intersect(BoundaryDivisorClass(3), c), Rat(0));
  }
}

TEST(Intersect, GenusMismatchThrows) {
  EXPECT_THROW(logmmp::intersect(BoundaryDivisorClass(3), VitalCurve(2, {1, 1, 2, 2})), std::invalid_argument);
}

TEST(IntersectProperty, LabelIndependence) {
  std::mt19937 rng(3);
  for (int g = 2; g <= 9; ++g) {
    const auto d = random_class(rng, g);
    for (const auto& c : logmmp::enumerate_vital_curves(g)) {
      auto labels = c.parts();
      const Rat expected = logmmp::intersect(d, c);
      do {
        EXPECT_EQ(logmmp::intersect_labeled(d, labels), expected);
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  }
}

TEST(IntersectProperty, Linearity) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int g = 2 + trial % 8;
    const auto d1 = random_class(rng, g);
    const auto d2 = random_class(rng, g);
    const Rat s = logmmp::testing::random_rat(rng);
    for (const auto& c : logmmp::enumerate_vital_curves(g)) {
      EXPECT_EQ(logmmp::intersect(d1 + d2, c), logmmp::intersect(d1, c) + logmmp::intersect(d2, c));
      EXPECT_EQ(logmmp::intersect(s * d1, c), s * logmmp::intersect(d1, c));
    }
  }
}

TEST(IntersectProperty, GenericWallCurvePairsToMinusOne) {
  int checked = 0;
  for (int g = 2; g <= 12; ++g) {
    for (int j = 3; j <= g + 1; ++j) {
      const auto pure = BoundaryDivisorClass::unit(g, j);
      for (int a = 1; a < j; ++a) {
        for (int b = 1; a + b < j; ++b) {
          bool generic = true;
          for (int idx : {a + b, j - a, j - b, a, b, j - a - b}) {
            if (logmmp::fold_index(g, idx) == j) generic = false;
          }
          if (!generic) continue;
          ++checked;
          EXPECT_EQ(logmmp::intersect(pure, VitalCurve(g, {a, b, j - a - b, 2 * g + 2 - j})), Rat(-1))
              << "g=" << g << " j=" << j << " a=" << a << " b=" << b;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(NefScan, WallCurveIsExtremalAtNineElevenths) {
  const auto report = logmmp::nef_scan(logmmp::make_l_alpha(2, Rat(9, 11)));
  EXPECT_NE(std::find(report.zero.begin(), report.zero.end(), VitalCurve(2, {1, 1, 1, 3})), report.zero.end());
  EXPECT_TRUE(report.negative.empty());
}

TEST(NefScan, PureB3AtGenusTwo) {
  const auto report = logmmp::nef_scan(BoundaryDivisorClass::unit(2, 3));
  EXPECT_EQ(report.minimum, Rat(-1));
  ASSERT_EQ(report.negative.size(), 1u);
  EXPECT_EQ(report.negative[0], VitalCurve(2, {1, 1, 1, 3}));
}

TEST(NefScan, ZeroClass) {
  for (int g = 2; g <= 6; ++g) {
    const auto report = logmmp::nef_scan(BoundaryDivisorClass(g));
    EXPECT_EQ(report.minimum, Rat(0));
    EXPECT_EQ(report.zero.size(), logmmp::enumerate_vital_curves(g).size());
    EXPECT_TRUE(report.negative.empty());
  }
}
