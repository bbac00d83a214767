#pragma once

#include <random>

#include "rpq/arith/rational.hpp"

namespace rpq::test {

/// n/d in canonical form.
inline BigRational rat(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

/// Deterministic generator for property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random rational with numerator in [-range, range] and denominator in [1, range].
inline BigRational random_rational(long range) { return rat(uniform(-range, range), uniform(1, range)); }

}  // namespace rpq::test
