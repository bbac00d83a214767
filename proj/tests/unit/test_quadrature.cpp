#include <doctest.h>

#include "rpq/arith/errors.hpp"
#include "rpq/quadrature/jackson.hpp"
#include "rpq/series/functions.hpp"
#include "support.hpp"

using namespace rpq;
using namespace rpq::quadrature;
using deform::make_params;
using deform::Preset;
using rpq::test::rat;

namespace {

RationalParams js(const BigRational& p, const BigRational& q) { return make_params(Preset::jagannathan_srinivasa, p, q); }

// Node sum (p - q) a sum q^r/p^(r+1) f(q^r a/p^(r+1)) evaluated term by term.
BigRational node_sum(const Function& f, const BigRational& a, const BigRational& p, const BigRational& q, long terms) {
  BigRational sum = 0;
  BigRational w = 1 / p;
  for (long r = 0; r <= terms; ++r) {
    sum += w * f(BigRational(w * a));
    w = BigRational(w * q / p);
  }
  return BigRational((p - q) * a * sum);
}

BigRational abs_value(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("integral of z over [0, 1]") {
    auto params = js(1, rat(1, 2));
    Polynomial z = Polynomial::z();
    CHECK(definite_integral_poly(z, 0, 1, params) == rat(2, 3));
    CHECK(jackson_sum(z, BigRational(1), QuadratureSpec{params, std::nullopt}) == rat(2, 3));
  }

  TEST_CASE("constant integrand gives a") {
    auto params = js(rat(4, 5), rat(1, 2));
    for (long k = 1; k <= 5; ++k) {
      BigRational a = rat(k, 3);
      CHECK(jackson_sum(Polynomial(1), a, QuadratureSpec{params, std::nullopt}) == a);
      CHECK(definite_integral_poly(Polynomial(1), 0, a, params) == a);
    }
  }

  TEST_CASE("truncated node sum of z^2") {
    const BigRational p = rat(4, 5), q = rat(1, 2), a = rat(3, 2);
    auto params = js(p, q);
    Function f = [](const BigRational& x) { return BigRational(x * x); };
    BigRational truncated = jackson_sum(f, a, QuadratureSpec{params, 200});
    CHECK(truncated == node_sum(f, a, p, q, 200));
    BigRational closed = jackson_sum(Polynomial::monomial(2), a, QuadratureSpec{params, std::nullopt});
    CHECK(closed == BigRational(a * a * a * (p - q) / (p * p * p - q * q * q)));
    CHECK(abs_value(BigRational(closed - truncated)) < BigRational(1, BigInt("1" + std::string(30, '0'))));
  }

  TEST_CASE("Heine binding and mirrored regime") {
    auto heine = make_params(Preset::heine, 1, rat(1, 3));
    CHECK(jackson_sum(Polynomial::z(), BigRational(1), QuadratureSpec{heine, std::nullopt}) == rat(3, 4));
    auto mirrored = js(rat(1, 2), rat(4, 5));
    BigRational v = jackson_sum(Polynomial::monomial(2), BigRational(1), QuadratureSpec{mirrored, std::nullopt, Regime::p_over_q});
    CHECK(v == definite_integral_poly(Polynomial::monomial(2), 0, 1, mirrored));
    CHECK_THROWS_AS(jackson_sum(Polynomial::z(), BigRational(1), QuadratureSpec{js(rat(4, 5), rat(1, 2)), 10, Regime::p_over_q}),
                    RegimeError);
    CHECK_THROWS(jackson_sum(Polynomial::z(), BigRational(1), QuadratureSpec{make_params(Preset::quesne, 1, rat(1, 2)), std::nullopt}));
  }

  TEST_CASE("fundamental theorem and additivity") {
    for (Preset preset : deform::all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      for (int i = 0; i < 20; ++i) {
        std::vector<BigRational> c;
        for (long k = 0; k <= 6; ++k) c.push_back(test::random_rational(20));
        Polynomial f = Polynomial::from_coefficients(c);
        BigRational a = test::random_rational(10), b = test::random_rational(10), m = test::random_rational(10);
        CHECK(definite_integral_poly(series::rpq_derivative(f, params), a, b, params) == f(b) - f(a));
        CHECK(definite_integral_poly(f, a, m, params) + definite_integral_poly(f, m, b, params) ==
              definite_integral_poly(f, a, b, params));
      }
    }
  }

  TEST_CASE("integration by parts") {
    for (Preset preset : deform::all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      for (int i = 0; i < 10; ++i) {
        std::vector<BigRational> cf, cg;
        for (long k = 0; k <= 4; ++k) {
          cf.push_back(test::random_rational(9));
          cg.push_back(test::random_rational(9));
        }
        Report r = integration_by_parts_check(Polynomial::from_coefficients(cf), Polynomial::from_coefficients(cg),
                                              rat(-1, 2), rat(5, 3), params);
        CHECK(r.all_asserted_pass());
      }
    }
  }

  TEST_CASE("improper integral with a decay certificate") {
    auto params = js(rat(4, 5), rat(1, 2));
    Function f = [](const BigRational& x) { return BigRational(1 / (1 + x * x)); };
    DecayCertificate cert{1, rat(1, 2), BigRational(2)};
    double previous_zero = 1e300, previous_inf = 1e300;
    BigRational previous_value;
    for (long terms : {10L, 20L, 40L, 80L}) {
      ImproperResult r = improper_integral(f, QuadratureSpec{params, terms}, cert);
      CHECK(r.value == r.near_part + r.far_part);
      CHECK(r.zero_tail_bound < previous_zero);
      CHECK(r.infinity_tail_bound < previous_inf);
      if (terms > 10) {
        // Successive values differ by at most the previous tail bounds.
        double diff = abs_value(BigRational(r.value - previous_value)).get_d();
        CHECK(diff <= previous_zero + previous_inf);
      }
      previous_zero = r.zero_tail_bound;
      previous_inf = r.infinity_tail_bound;
      previous_value = r.value;
    }
    CHECK(previous_zero + previous_inf < 1e-6);
  }

  TEST_CASE("improper integral needs a certificate") {
    auto params = js(rat(4, 5), rat(1, 2));
    Function f = [](const BigRational& x) { return BigRational(1 / (1 + x * x)); };
    CHECK_THROWS_AS(improper_integral(f, QuadratureSpec{params, 10}, std::nullopt), ConvergenceUnverified);
    CHECK_THROWS_AS(improper_integral(f, QuadratureSpec{params, 10}, DecayCertificate{1, rat(1, 2), std::nullopt}),
                    ConvergenceUnverified);
    CHECK_THROWS_AS(improper_integral(f, QuadratureSpec{params, 10}, DecayCertificate{1, rat(3, 2), BigRational(2)}),
                    ConvergenceUnverified);
  }
}
