#pragma once

// Seeded generators for property checks: small rationals, rational SL(2)
// elements and float SL(2) elements built as products of subgroup factors.

#include <random>

#include "eph/sl2.hpp"

namespace eph {

using rng_t = std::mt19937_64;

inline rational random_rational(rng_t& rng, int max_num = 20, int max_den = 12) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return rational(num(rng)) / rational(den(rng));
}

inline rational random_nonzero_rational(rng_t& rng, int max_num = 20, int max_den = 12) {
  for (;;)
    if (rational q = random_rational(rng, max_num, max_den); q != 0) return q;
}

inline rational random_positive_rational(rng_t& rng, int max_num = 20, int max_den = 12) {
  rational q = random_nonzero_rational(rng, max_num, max_den);
  return q < 0 ? rational(-q) : q;
}

// Rational point of the circle from a Pythagorean parameterisation.
inline SL2<rational> random_rational_k(rng_t& rng) {
  rational m = random_rational(rng, 6, 5);
  rational d = 1 + m * m;
  return k_element<rational>((1 - m * m) / d, 2 * m / d);
}

// Product of three factors chosen among diag(q, 1/q), N(t), K, N'(t).
inline SL2<rational> random_rational_sl2(rng_t& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  SL2<rational> g = SL2<rational>::identity();
  for (int i = 0; i < 3; ++i) {
    switch (pick(rng)) {
      case 0: g = g * a_element(random_positive_rational(rng, 4, 3)); break;
      case 1: g = g * subgroup_element(Subgroup::N, random_rational(rng, 6, 4)); break;
      case 2: g = g * random_rational_k(rng); break;
      default: g = g * subgroup_element(Subgroup::Nprime, random_rational(rng, 6, 4)); break;
    }
  }
  return g;
}

// Product of three random A(t), N(t), K(t) factors with t in [-2, 2].
inline SL2<double> random_float_sl2(rng_t& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> t(-2.0, 2.0);
  SL2<double> g = SL2<double>::identity();
  for (int i = 0; i < 3; ++i) {
    static constexpr Subgroup kinds[] = {Subgroup::A, Subgroup::N, Subgroup::K};
    g = g * subgroup_element(kinds[pick(rng)], t(rng));
  }
  return g;
}

}  // namespace eph
