#pragma once

#include <random>
#include <vector>

#include "logmmp/polynomial.hpp"
#include "logmmp/rational.hpp"

namespace logmmp::testing {

/// Small random rationals p/q with |p| <= bound and 1 <= q <= bound.
inline Rat random_rat(std::mt19937& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937& rng, long bound = 50) {
  Rat r;
  do {
    r = random_rat(rng, bound);
  } while (r.is_zero());
  return r;
}

inline Poly random_poly(std::mt19937& rng, Var var, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rat> coeffs;
  for (int k = deg(rng); k >= 0; --k) coeffs.push_back(random_rat(rng, 12));
  return Poly(var, std::move(coeffs));
}

}  // namespace logmmp::testing
