#pragma once

#include <random>
#include <vector>

#include "qheun/polynomial.hpp"
#include "qheun/ratfun.hpp"

namespace qheun::testing {

inline Rational small_rational(std::mt19937_64& rng, long num_max = 9, long den_max = 7) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng, long num_max = 9, long den_max = 7) {
  for (;;) {
    Rational r = small_rational(rng, num_max, den_max);
    if (!r.is_zero()) return r;
  }
}

inline Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k < degree; ++k) c.push_back(small_rational(rng));
  c.push_back(nonzero_rational(rng));
  return Polynomial(std::move(c));
}

inline RationalFunction random_ratfun(std::mt19937_64& rng, int num_degree, int den_degree) {
  return RationalFunction(random_poly(rng, num_degree), random_poly(rng, den_degree));
}

}  // namespace qheun::testing
