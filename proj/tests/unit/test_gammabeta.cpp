#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "rpq/arith/errors.hpp"
#include "rpq/gammabeta/gamma.hpp"
#include "rpq/gammabeta/power_basis.hpp"
#include "rpq/gammabeta/taylor.hpp"
#include "support.hpp"

using namespace rpq;
using namespace rpq::gammabeta;
using deform::make_params;
using deform::Preset;
using rpq::test::rat;

namespace {

RationalParams js(const BigRational& p, const BigRational& q) { return make_params(Preset::jagannathan_srinivasa, p, q); }

RationalParams classical() {
  return RationalParams::classical(deform::StructureFunction(Preset::jagannathan_srinivasa), BigRational(1));
}

HighFloat relative_gap(const HighFloat& a, const HighFloat& b) { return abs(a / b - 1); }

// Slack for the 100-digit arithmetic on top of the certified tail bounds.
const HighFloat kRounding("1e-80");

}  // namespace

TEST_SUITE("gammabeta") {
  TEST_CASE("power basis examples") {
    auto params = js(rat(4, 5), rat(1, 2));
    const BigRational a = rat(2, 3);
    Polynomial x = Polynomial::z();
    Polynomial expected = (x - Polynomial(a)) * (Polynomial(params.xi1()) * x - Polynomial(BigRational(a * params.xi2())));
    CHECK(power_basis_polynomial(1, a, 2, params) == expected);
    auto half = js(1, rat(1, 2));
    CHECK(power_basis(BigRational(1), rat(1, 2), 3, Sign::minus, half) == rat(21, 64));
    CHECK(power_basis(BigRational(1), rat(1, 2), 0, Sign::plus, half) == 1);
    // Negative exponents invert the shifted positive ones.
    for (long n = 1; n <= 5; ++n) {
      BigRational xs = BigRational(rat(3, 1) * ipow(params.xi1(), -n));
      BigRational ys = BigRational(rat(1, 7) * ipow(params.xi2(), -n));
      CHECK(power_basis(rat(3, 1), rat(1, 7), -n, Sign::minus, params) * power_basis(xs, ys, n, Sign::minus, params) == 1);
    }
  }

  TEST_CASE("power basis evaluated matches its polynomial") {
    auto params = js(rat(4, 5), rat(1, 2));
    for (int i = 0; i < 30; ++i) {
      BigRational x = test::random_rational(20), a = test::random_rational(20);
      long n = test::uniform(0, 7);
      CHECK(power_basis_polynomial(1, a, n, params)(x) == power_basis(x, a, n, Sign::minus, params));
      CHECK(reverse_power_basis_polynomial(a, 1, n, params)(x) == power_basis(a, x, n, Sign::minus, params));
    }
  }

  TEST_CASE("power basis suites") {
    for (Preset preset : deform::all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      CHECK(power_basis_identity_suite(params, 5, 2).all_asserted_pass());
      CHECK(power_basis_derivative_suite(params, 5, 2).all_asserted_pass());
    }
  }

  TEST_CASE("gamma at integers is the factorial") {
    CHECK(*gamma_rpq(4, js(1, rat(1, 2))).exact == rat(21, 8));
    auto params = js(rat(4, 5), rat(1, 2));
    for (long n = 0; n <= 32; ++n) {
      GammaValue g = gamma_rpq(n + 1, params);
      REQUIRE(g.exact.has_value());
      CHECK(*g.exact == deform::rpq_factorial(params, n));
    }
    CHECK_THROWS_AS(gamma_rpq(0, params), PoleError);
    CHECK_THROWS_AS(gamma_rpq(-3, params), PoleError);
  }

  TEST_CASE("gamma recurrence at rational arguments") {
    auto params = js(rat(4, 5), rat(1, 2));
    for (BigRational z : {rat(1, 2), rat(1, 3), rat(7, 5), rat(-1, 2), rat(13, 4)}) {
      GammaValue g0 = gamma_rpq(z, params);
      GammaValue g1 = gamma_rpq(BigRational(z + 1), params);
      HighFloat tol = g0.relative_tail_bound + g1.relative_tail_bound + kRounding;
      CHECK(relative_gap(g1.value, deformed_number_real(z, params) * g0.value) <= tol);
    }
  }

  TEST_CASE("gamma truncation converges within its bound") {
    auto params = js(rat(4, 5), rat(1, 2));
    GammaValue coarse = gamma_rpq(rat(1, 2), params, 64);
    GammaValue fine = gamma_rpq(rat(1, 2), params, 512);
    CHECK(coarse.relative_tail_bound > fine.relative_tail_bound);
    CHECK(relative_gap(coarse.value, fine.value) <= coarse.relative_tail_bound + fine.relative_tail_bound + kRounding);
  }

  TEST_CASE("beta values and recurrences") {
    auto params = js(rat(4, 5), rat(1, 2));
    CHECK(*beta_rpq(1, 1, params).exact == 1);
    // beta(1, n) = 1/[n].
    for (long n = 1; n <= 10; ++n) CHECK(*beta_rpq(1, n, params).exact == BigRational(1 / deform::rpq_number(params, n)));
    for (auto [x, y] : {std::pair{rat(1, 2), rat(1, 3)}, std::pair{rat(5, 2), rat(3, 4)}, std::pair{rat(2), rat(1, 5)}}) {
      GammaValue bxy = beta_rpq(x, y, params);
      GammaValue byx = beta_rpq(y, x, params);
      CHECK(relative_gap(bxy.value, byx.value) <= bxy.relative_tail_bound + byx.relative_tail_bound + kRounding);
      GammaValue shifted = beta_rpq(BigRational(x + 1), y, params);
      HighFloat ratio = deformed_number_real(x, params) / deformed_number_real(BigRational(x + y), params);
      CHECK(relative_gap(shifted.value, ratio * bxy.value) <=
            2 * (bxy.relative_tail_bound + shifted.relative_tail_bound) + kRounding);
    }
  }

  TEST_CASE("classical limit") {
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    auto c = classical();
    CHECK(abs(gamma_rpq(rat(1, 2), c).value - sqrt(pi)) < kRounding);
    for (BigRational x : {rat(1, 3), rat(1, 4), rat(2, 5)}) {
      HighFloat b = beta_rpq(x, BigRational(1 - x), c).value;
      CHECK(abs(b - pi / sin(pi * to_high(x))) < kRounding);
    }
    CHECK(*gamma_rpq(5, c).exact == 24);
    CHECK(gamma_identity_suite(c).all_asserted_pass());
  }

  TEST_CASE("identity suite for every preset") {
    for (Preset preset : deform::all_presets()) {
      CHECK(gamma_identity_suite(make_params(preset, rat(4, 5), rat(1, 2))).all_asserted_pass());
    }
  }

  TEST_CASE("Taylor expansions reconstruct random cubics") {
    for (Preset preset : deform::all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      for (int i = 0; i < 10; ++i) {
        std::vector<BigRational> c;
        for (long k = 0; k <= 3; ++k) c.push_back(test::random_rational(30));
        Polynomial f = Polynomial::from_coefficients(c);
        BigRational a = test::random_rational(5);
        for (TaylorForm form : {TaylorForm::forward, TaylorForm::reverse}) {
          CHECK(taylor_reconstruct(taylor_expand(f, a, params, form), a, params, form) == f);
        }
      }
      CHECK(taylor_suite(params, 6).all_asserted_pass());
    }
  }

  TEST_CASE("Taylor coefficients of a monomial at zero") {
    // z^3 = (z (-) 0)^3 / xi1^3, so only c_3 is nonzero.
    auto params = js(rat(4, 5), rat(1, 2));
    auto c = taylor_expand(Polynomial::monomial(3), 0, params, TaylorForm::forward);
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(c[k] == (k == 3 ? BigRational(1 / ipow(params.xi1(), 3)) : BigRational(0)));
    }
  }
}
