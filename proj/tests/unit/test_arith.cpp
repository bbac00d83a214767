#include <doctest.h>

#include "rpq/arith/errors.hpp"
#include "rpq/arith/padic.hpp"
#include "support.hpp"

using namespace rpq;
using rpq::test::rat;

namespace {

// Exponent of p in n by repeated division.
long divide_out(long n, long p) {
  long k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

// Partial sum of x^n/n! over the rationals, stopping once the valuation bound passes `digits`.
BigRational exp_partial_sum(const BigRational& x, long p, long digits) {
  BigRational sum = 1;
  BigRational term = 1;
  const long v = *padic_valuation(x, p);
  for (long n = 1; n * v - (n - 1) / (p - 1) < digits + 4; ++n) {
    term = BigRational(term * x / n);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("valuation of integers") {
    CHECK(valuation(BigInt(8), 2) == divide_out(8, 2));
    CHECK(valuation(BigInt(8), 2) == 3);
    CHECK(valuation(BigInt(1), 5) == 0);
    for (long n = 1; n <= 500; ++n) {
      for (long p : {2L, 3L, 5L, 7L}) CHECK(valuation(BigInt(n), p) == divide_out(n, p));
    }
  }

  TEST_CASE("norms") {
    CHECK(PadicNumber::from_rational(18, 3, 8).norm() == rat(1, 9));
    CHECK(PadicNumber::zero(3, 8).norm() == 0);
    CHECK(PadicNumber::from_rational(rat(2, 7), 3, 8).norm() == 1);
    for (long p : {2L, 3L, 5L, 7L}) {
      PadicNumber x = PadicNumber::from_integer(p, p, 8);
      CHECK(x.valuation() == 1);
      CHECK(x.norm() == rat(1, p));
    }
  }

  TEST_CASE("strong triangle inequality on random samples") {
    for (int i = 0; i < 300; ++i) {
      const long p = std::vector<long>{2, 3, 5, 7}[static_cast<std::size_t>(test::uniform(0, 3))];
      BigRational a = test::random_rational(200);
      BigRational b = test::random_rational(200);
      if (a == 0 || b == 0 || a + b == 0) continue;
      PadicNumber x = PadicNumber::from_rational(a, p, 12);
      PadicNumber y = PadicNumber::from_rational(b, p, 12);
      CHECK((x + y).norm() <= std::max(x.norm(), y.norm()));
      // Exact oracle on the rationals.
      CHECK((x + y).valuation() == *padic_valuation(BigRational(a + b), p));
    }
  }

  TEST_CASE("x + x at p = 2 raises the valuation") {
    for (long n = 1; n <= 40; ++n) {
      PadicNumber x = PadicNumber::from_integer(n, 2, 10);
      CHECK((x + x).valuation() >= x.valuation() + 1);
    }
  }

  TEST_CASE("(1 + p)(1 - p) = 1 - p^2") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      PadicNumber a = PadicNumber::from_integer(1 + p, p, 10);
      PadicNumber b = PadicNumber::from_integer(1 - p, p, 10);
      CHECK(a * b == PadicNumber::from_integer(1 - p * p, p, 10));
    }
  }

  TEST_CASE("ring laws on random triples") {
    for (int i = 0; i < 200; ++i) {
      const long p = 5;
      PadicNumber x = PadicNumber::from_rational(test::random_rational(500), p, 12);
      PadicNumber y = PadicNumber::from_rational(test::random_rational(500), p, 12);
      PadicNumber z = PadicNumber::from_rational(test::random_rational(500), p, 12);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }

  TEST_CASE("rational embedding re-sums to a/b mod p^N") {
    for (int i = 0; i < 100; ++i) {
      const long p = 7;
      const long N = 10;
      long a = test::uniform(-1000, 1000);
      long b = test::uniform(1, 1000);
      if (b % p == 0 || a % p == 0) continue;
      PadicNumber x = PadicNumber::from_rational(rat(a, b), p, N);
      BigInt sum = 0;
      BigInt power = 1;
      for (long d : x.digits()) {
        sum += power * d;
        power *= p;
      }
      BigInt modulus = ipow(p, N);
      BigInt residue = (sum * b - a) % modulus;
      CHECK(residue == 0);
    }
  }

  TEST_CASE("canonical text form") {
    PadicNumber x = PadicNumber::from_integer(7, 5, 3);
    CHECK(x.to_string() == "5^0 * (2 + 1*5 + 0*5^2) [3 digits]");
    CHECK(PadicNumber::zero(5, 3).to_string() == "0");
  }

  TEST_CASE("exp and log") {
    CHECK(padic_exp(PadicNumber::zero(5, 8)) == PadicNumber::from_integer(1, 5, 8));
    CHECK(padic_log(PadicNumber::from_integer(1, 5, 8)).is_zero());
    PadicNumber five = PadicNumber::from_integer(5, 5, 8);
    PadicNumber e5 = padic_exp(five);
    CHECK(e5 * e5 == padic_exp(PadicNumber::from_integer(10, 5, 8)));
    // Series oracle over the rationals.
    CHECK(e5.agrees_with(PadicNumber::from_rational(exp_partial_sum(5, 5, 9), 5, 9), 9));
    CHECK(padic_log(e5) == five);
    CHECK_THROWS_AS(padic_exp(PadicNumber::from_integer(1, 5, 8)), ConvergenceDomainError);
    CHECK_THROWS_AS(padic_exp(PadicNumber::from_integer(2, 2, 8)), ConvergenceDomainError);
  }

  TEST_CASE("q^x through exp and log") {
    PadicNumber q = PadicNumber::from_integer(6, 5, 8);
    CHECK(padic_power(q, PadicNumber::zero(5, 8)) == PadicNumber::from_integer(1, 5, 8));
    CHECK(padic_power(q, PadicNumber::from_integer(1, 5, 8)) == q);
    CHECK(padic_power(q, PadicNumber::from_integer(2, 5, 8)) == q * q);
    CHECK(padic_power(q, PadicNumber::from_integer(-3, 5, 8)) == (q * q * q).inverse());
  }

  TEST_CASE("parse_rational is canonical and strict") {
    CHECK(parse_rational("6/4") == rat(3, 2));
    CHECK(parse_rational("-10/4") == rat(-5, 2));
    CHECK_THROWS_AS(parse_rational("-10/-4"), InvalidParameter);
    CHECK(to_string(parse_rational("6/2")) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidParameter);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidParameter);
    CHECK_THROWS_AS(parse_rational("1.5"), InvalidParameter);
  }

  TEST_CASE("from_rational and to_rational round trip") {
    for (int i = 0; i < 200; ++i) {
      BigRational a = test::random_rational(1000);
      if (a == 0) continue;
      PadicNumber x = PadicNumber::from_rational(a, 3, 20);
      CHECK(PadicNumber::from_rational(x.to_rational(), 3, 20) == x);
    }
  }
}
