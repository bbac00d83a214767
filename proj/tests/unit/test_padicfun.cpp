#include <doctest.h>

#include "rpq/arith/errors.hpp"
#include "rpq/padicfun/gamma.hpp"
#include "rpq/padicfun/twist.hpp"
#include "rpq/padicfun/volkenborn.hpp"
#include "support.hpp"

using namespace rpq;
using namespace rpq::padicfun;
using rpq::test::rat;

namespace {

// (rho^j - q^j)/(rho - q) over the rationals.
BigRational js_number(const BigRational& rho, const BigRational& q, long j) {
  return BigRational((ipow(rho, j) - ipow(q, j)) / (rho - q));
}

// (-1)^n times the product of the j < n prime to p, as an integer.
BigInt morita(long n, long p) {
  BigInt prod = 1;
  for (long j = 1; j < n; ++j) {
    if (j % p != 0) prod *= j;
  }
  return n % 2 == 0 ? prod : BigInt(-prod);
}

PadicNumber integer(long n, long p, long precision = 16) { return PadicNumber::from_integer(n, p, precision); }

}  // namespace

TEST_SUITE("padicfun") {
  TEST_CASE("classical factorial skips multiples of p") {
    auto tw = TwistParams::classical(5);
    CHECK(padic_factorial_rpq(4, tw) == integer(6, 5));
    CHECK(padic_factorial_rpq(6, tw) == integer(24, 5));
    CHECK(padic_factorial_rpq(7, tw) == integer(144, 5));
    CHECK(padic_factorial_rpq(0, tw) == integer(1, 5));
  }

  TEST_CASE("classical gamma agrees with the integer products") {
    for (long p : {2L, 3L, 5L, 7L}) {
      auto tw = TwistParams::classical(p);
      for (long n = 0; n <= 25; ++n) CHECK(padic_gamma_rpq(n, tw) == PadicNumber::from_integer(morita(n, p), p, 16));
    }
  }

  TEST_CASE("twisted factorial against rational products") {
    const BigRational rho = 6, q = 11;
    TwistParams tw(5, rho, q);
    BigRational prod = 1;
    for (long n = 1; n <= 20; ++n) {
      CHECK(padic_factorial_rpq(n, tw).agrees_with(PadicNumber::from_rational(prod, 5, 16), 16));
      if (n % 5 != 0) prod *= js_number(rho, q, n);
    }
  }

  TEST_CASE("gamma values, units and delta") {
    for (long p : {3L, 5L, 7L}) {
      TwistParams tw(p, 1 + p, 1 + 2 * p);
      CHECK(padic_gamma_rpq(0, tw) == integer(1, p));
      CHECK(padic_gamma_rpq(1, tw) == integer(-1, p));
      CHECK(delta_factor(p, tw) == integer(-1, p));
      CHECK(delta_factor(1, tw) == -tw.number(1));
      CHECK(delta_factor(2, tw) == -tw.number(2));
      for (long z = 0; z <= 2 * p; ++z) {
        CHECK(padic_gamma_rpq(z, tw).norm() == 1);
        CHECK(padic_gamma_rpq(z + 1, tw) == delta_factor(z, tw) * padic_gamma_rpq(z, tw));
      }
      for (long z = -6; z < 0; ++z) CHECK(padic_gamma_rpq(z + 1, tw) == delta_factor(z, tw) * padic_gamma_rpq(z, tw));
    }
  }

  TEST_CASE("factorial decomposition") {
    TwistParams tw(3, 4, 7);
    CHECK(factorial_decomposition_check(7, tw).all_asserted_pass());
    for (long n = 1; n <= 30; ++n) CHECK(factorial_decomposition_check(n, TwistParams(5, 6, 11)).all_asserted_pass());
    CHECK(padic_gamma_suite(tw).all_asserted_pass());
    CHECK(padic_gamma_suite(TwistParams::classical(7)).all_asserted_pass());
  }

  TEST_CASE("classical gamma at one half squares to a sign") {
    // Gamma_p(1/2)^2 = (-1)^((p+1)/2) for odd p.
    for (long p : {3L, 5L, 7L}) {
      auto tw = TwistParams::classical(p);
      LimitReport r = padic_gamma_limit(PadicNumber::from_rational(rat(1, 2), p, 16), 6, tw);
      // Truncations k and k+1 differ at valuation k, so the values agree to at least k digits.
      for (std::size_t k = 0; k < r.difference_valuations.size(); ++k) CHECK(r.difference_valuations[k] >= long(k) + 1);
      REQUIRE(r.certified_digits >= 3);
      const long sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
      CHECK((r.value * r.value).agrees_with(integer(sign, p), r.certified_digits));
    }
  }

  TEST_CASE("beta") {
    TwistParams tw(5, 6, 11);
    for (long x = 1; x <= 6; ++x) {
      CHECK(padic_beta_rpq(x, 1 - x, tw) == -(padic_gamma_rpq(x, tw) * padic_gamma_rpq(1 - x, tw)));
      for (long y = 1; y <= 4; ++y) CHECK(padic_beta_rpq(x, y, tw) == padic_beta_rpq(y, x, tw));
    }
    CHECK(padic_beta_suite(tw).all_asserted_pass());
  }

  TEST_CASE("twist domain") {
    CHECK_THROWS_AS(TwistParams(5, 2, 6), InvalidParameter);
    CHECK_THROWS_AS(TwistParams(5, 6, 6), InvalidParameter);
    CHECK_THROWS_AS(TwistParams(4, 5, 9), InvalidParameter);
    CHECK_NOTHROW(TwistParams(5, 1, 6));
    CHECK_THROWS_AS(TwistParams(2, 3, 5).require_volkenborn(), ConvergenceDomainError);
    CHECK_NOTHROW(TwistParams(2, 5, 9).require_volkenborn());
  }

  TEST_CASE("number at integers") {
    TwistParams tw(5, 6, 11);
    for (long n = -5; n <= 12; ++n) CHECK(tw.number_at(integer(n, 5)) == tw.number(n));
    for (long n = 0; n <= 12; ++n) CHECK(tw.number(n).agrees_with(PadicNumber::from_rational(js_number(6, 11, n), 5, 16), 16));
  }

  TEST_CASE("classical measure is uniform") {
    auto tw = TwistParams::classical(5);
    for (long level = 1; level <= 3; ++level) {
      for (long a : {0L, 1L, 4L}) {
        CHECK(volkenborn_measure(a, level, tw) == PadicNumber::from_rational(BigRational(1, ipow(5L, static_cast<unsigned long>(level))), 5, 16));
      }
    }
  }

  TEST_CASE("distribution relation and total mass") {
    TwistParams tw(5, 6, 11);
    const long p = 5;
    const long level = 2;
    const long a = 3;
    PadicNumber sum = PadicNumber::zero(p, 16);
    for (long b = 0; b < p; ++b) sum += volkenborn_measure(a + b * 25, level + 1, tw);
    CHECK(sum == volkenborn_measure(a, level, tw));
    for (long n = 1; n <= 3; ++n) {
      VolkenbornLevel lv(n, tw);
      PadicNumber total = PadicNumber::zero(p, 16);
      for (const auto& w : lv.weights()) total += w;
      CHECK(total == tw.rho());
    }
    // The printed ratio breaks the relation.
    PadicNumber printed = PadicNumber::zero(p, 16);
    for (long b = 0; b < p; ++b) printed += volkenborn_measure_printed(a + b * 25, level + 1, tw);
    CHECK_FALSE(printed == volkenborn_measure_printed(a, level, tw));
  }

  TEST_CASE("classical moments") {
    auto tw = TwistParams::classical(5);
    auto ident = [](long x) { return PadicNumber::from_integer(x, 5, 26); };
    LimitReport r = volkenborn_integral(ident, 6, tw);
    CHECK(r.converged);
    CHECK(r.value.agrees_with(PadicNumber::from_rational(rat(-1, 2), 5, 16), r.certified_digits));
    CHECK(r.certified_digits >= 5);
    auto square = [](long x) { return PadicNumber::from_integer(x * x, 5, 26); };
    LimitReport r2 = volkenborn_integral(square, 6, tw);
    CHECK(r2.value.agrees_with(PadicNumber::from_rational(rat(1, 6), 5, 16), r2.certified_digits));
  }

  TEST_CASE("Carlitz routes agree") {
    TwistParams tw(5, 6, 11);
    for (long n = 0; n <= 3; ++n) {
      CarlitzResult c = carlitz_bernoulli(n, 1, integer(0, 5), tw, 4);
      const long digits = std::min(c.direct.certified_digits, c.binomial.certified_digits);
      CHECK(c.direct.value.agrees_with(c.binomial.value, digits));
      CHECK(c.direct.values.size() == 4);
    }
    CHECK(volkenborn_suite(tw, 4).all_asserted_pass());
  }

  TEST_CASE("fermionic integral") {
    const long p = 5, precision = 20;
    auto one = [&](long) { return PadicNumber::from_integer(1, p, precision); };
    LimitReport r = fermionic_integral(one, 4, p, precision);
    CHECK(r.value == PadicNumber::from_integer(1, p, precision));
    auto sq = [&](long x) { return PadicNumber::from_integer(x * x, p, precision); };
    auto sq1 = [&](long x) { return PadicNumber::from_integer((x + 1) * (x + 1), p, precision); };
    const long levels = 4;
    PadicNumber lhs = fermionic_integral(sq1, levels, p, precision).value + fermionic_integral(sq, levels, p, precision).value;
    // The level-N sums telescope to p^(2N).
    CHECK(lhs.valuation() >= 2 * levels);
    CHECK(fermionic_suite(p, precision, levels).all_asserted_pass());
    CHECK_THROWS(fermionic_integral(one, 3, 2, precision));
  }
}
