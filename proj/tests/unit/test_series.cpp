#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rpq/arith/errors.hpp"
#include "rpq/series/functions.hpp"
#include "support.hpp"

using namespace rpq;
using namespace rpq::series;
using deform::make_params;
using deform::Preset;
using rpq::test::rat;

namespace {

RationalParams js_half() { return make_params(Preset::jagannathan_srinivasa, 1, rat(1, 2)); }

RationalParams classical() {
  return RationalParams::classical(deform::StructureFunction(Preset::jagannathan_srinivasa), BigRational(1));
}

// Down-up permutations of 1..n counted directly.
long count_alternating(long n) {
  if (n <= 1) return 1;
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = (i % 2 == 0) ? perm[i] > perm[i + 1] : perm[i] < perm[i + 1];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Truncated quotient a/b of plain coefficient vectors, b[0] != 0.
std::vector<BigRational> divide(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  std::vector<BigRational> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    BigRational acc = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) acc -= b[k] * out[n - k];
    out[n] = BigRational(acc / b[0]);
  }
  return out;
}

// Coefficients xi^C(n,2)/[n]! built from rpq_number alone.
std::vector<BigRational> exp_coefficients(const RationalParams& params, const BigRational& xi, long order) {
  std::vector<BigRational> c;
  BigRational fact = 1;
  for (long n = 0; n <= order; ++n) {
    if (n > 0) fact *= deform::rpq_number(params, n);
    c.push_back(BigRational(ipow(xi, choose2(n)) / fact));
  }
  return c;
}

// B_0..B_n from sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<BigRational> bernoulli_recurrence(long n_max) {
  std::vector<BigRational> b{1};
  for (long n = 1; n <= n_max; ++n) {
    BigRational acc = 0;
    BigInt binom = 1;
    for (long k = 0; k < n; ++k) {
      acc += BigRational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b.push_back(BigRational(-acc / (n + 1)));
  }
  return b;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("derivative and antiderivative examples") {
    auto params = js_half();
    Polynomial f = Polynomial::from_coefficients({0, 1, 2});
    CHECK(rpq_derivative(f, params) == Polynomial::from_coefficients({1, 3}));
    CHECK(rpq_antiderivative(Polynomial::monomial(2), params) == Polynomial::monomial(3, rat(4, 7)));
    CHECK(rpq_derivative(Polynomial(5), params).is_zero());
  }

  TEST_CASE("derivative undoes antiderivative on random polynomials") {
    for (Preset preset : deform::all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      for (int i = 0; i < 20; ++i) {
        std::vector<BigRational> c;
        for (long k = 0; k <= test::uniform(0, 8); ++k) c.push_back(test::random_rational(50));
        Polynomial f = Polynomial::from_coefficients(c);
        CHECK(rpq_derivative(rpq_antiderivative(f, params), params) == f);
        Polynomial g = rpq_antiderivative(rpq_derivative(f, params), params);
        CHECK(g + Polynomial(f.coefficient(0)) == f);
      }
    }
  }

  TEST_CASE("exponential coefficients") {
    auto params = js_half();
    CHECK(exp_lower(params, 4)[2] == rat(2, 3));
    CHECK(exp_upper(params, 4)[2] == rat(1, 3));
    auto p = make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
    auto lower = exp_lower(p, 12);
    auto upper = exp_upper(p, 12);
    auto lo = exp_coefficients(p, p.xi1(), 12);
    auto up = exp_coefficients(p, p.xi2(), 12);
    for (long n = 0; n <= 12; ++n) {
      CHECK(lower[n] == lo[static_cast<std::size_t>(n)]);
      CHECK(upper[n] == up[static_cast<std::size_t>(n)]);
    }
  }

  TEST_CASE("classical trigonometric series") {
    auto c = classical();
    FormalSeries tan = trig_series(c, "tan", 5);
    CHECK(tan[0] == 0);
    CHECK(tan[1] == 1);
    CHECK(tan[3] == rat(1, 3));
    CHECK(tan[5] == rat(2, 15));
    FormalSeries csc = trig_series(c, "csc", 3, true);
    CHECK(csc.leading_exponent() == -1);
    CHECK(csc[0] == 1);
    CHECK(csc[2] == rat(1, 6));
    CHECK_THROWS_AS(trig_series(c, "csc", 3, false), PoleAtOrigin);
  }

  TEST_CASE("cos and sin are the parts of the exponential at iz") {
    auto p = make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
    for (auto [cos_name, sin_name, xi] : {std::tuple{"cos", "sin", p.xi1()}, std::tuple{"COS", "SIN", p.xi2()}}) {
      auto e = exp_coefficients(p, xi, 10);
      FormalSeries cos = trig_series(p, cos_name, 10);
      FormalSeries sin = trig_series(p, sin_name, 10);
      for (long n = 0; n <= 10; ++n) {
        BigRational sign = ((n / 2) % 2 == 0) ? 1 : -1;
        const BigRational& en = e[static_cast<std::size_t>(n)];
        CHECK(cos[n] == (n % 2 == 0 ? BigRational(sign * en) : BigRational(0)));
        CHECK(sin[n] == (n % 2 == 1 ? BigRational(sign * en) : BigRational(0)));
      }
    }
  }

  TEST_CASE("classical zigzag numbers count alternating permutations") {
    auto a = zigzag_numbers(classical(), 9);
    for (long n = 0; n <= 8; ++n) CHECK(a[static_cast<std::size_t>(n)] == count_alternating(n));
  }

  TEST_CASE("deformed zigzag numbers from (1 + sin)/cos") {
    auto p = make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
    const long order = 12;
    auto e = exp_coefficients(p, p.xi1(), order);
    std::vector<BigRational> num(static_cast<std::size_t>(order + 1)), den(static_cast<std::size_t>(order + 1));
    for (long n = 0; n <= order; ++n) {
      BigRational sign = ((n / 2) % 2 == 0) ? 1 : -1;
      auto i = static_cast<std::size_t>(n);
      if (n % 2 == 0) den[i] = sign * e[i];
      else num[i] = sign * e[i];
    }
    num[0] += 1;
    auto quotient = divide(num, den);
    auto a = zigzag_numbers(p, order + 1);
    for (long n = 0; n <= order; ++n) {
      auto i = static_cast<std::size_t>(n);
      CHECK(a[i] == quotient[i] * deform::rpq_factorial(p, n));
    }
  }

  TEST_CASE("classical Bernoulli numbers") {
    auto b = generating_polynomials(classical(), Family::bernoulli, 0, 8);
    auto oracle = bernoulli_recurrence(8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(b[n] == oracle[n]);
    CHECK(b[1] == rat(-1, 2));
    CHECK(b[8] == rat(-1, 30));
  }

  TEST_CASE("Genocchi from Euler") {
    for (Preset preset : deform::all_presets()) {
      auto p = make_params(preset, rat(4, 5), rat(1, 2));
      for (Convention conv : {Convention::lower, Convention::upper}) {
        auto g = generating_polynomials(p, Family::genocchi, rat(1, 3), 17, conv);
        auto e = generating_polynomials(p, Family::euler, rat(1, 3), 16, conv);
        CHECK(g[0] == 0);
        for (long n = 0; n <= 16; ++n) {
          CHECK(g[static_cast<std::size_t>(n + 1)] == deform::rpq_number(p, n + 1) * e[static_cast<std::size_t>(n)]);
        }
      }
    }
  }

  TEST_CASE("classical Euler-star numbers are the Euler numbers") {
    auto e = euler_star_numbers(classical(), 8);
    std::vector<long> expected{1, 0, -1, 0, 5, 0, -61, 0, 1385};
    for (std::size_t n = 0; n <= 8; ++n) CHECK(e[n] == expected[n]);
  }

  TEST_CASE("creation and annihilation") {
    auto params = js_half();
    Polynomial z2 = Polynomial::monomial(2);
    CHECK(rpq_derivative(Polynomial::z() * z2, params) == Polynomial::monomial(2, rat(7, 4)));
    CHECK(Polynomial::z() * rpq_derivative(z2, params) == Polynomial::monomial(2, rat(3, 2)));
    for (Preset preset : deform::all_presets()) {
      CHECK(operator_algebra_check(make_params(preset, rat(4, 5), rat(1, 2)), 12).all_asserted_pass());
    }
  }

  TEST_CASE("series arithmetic") {
    auto p = make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
    FormalSeries e = exp_lower(p, 10);
    FormalSeries one = FormalSeries::constant(1, 10);
    CHECK((e / e) == one);
    CHECK(((e * e) / e) == e);
    FormalSeries f = e.to_factorial(factorial_table(p, 10));
    CHECK(f.to_plain() == e);
    for (long n = 0; n <= 10; ++n) CHECK(f[n] == BigRational(ipow(p.xi1(), choose2(n))));
    CHECK_THROWS_AS(one / trig_series(p, "sin", 10), PoleAtOrigin);
  }
}
