#include <doctest.h>

#include "rpq/arith/errors.hpp"
#include "rpq/deform/params.hpp"
#include "support.hpp"

using namespace rpq;
using namespace rpq::deform;
using rpq::test::rat;

namespace {

// Each preset's derivative applied to z^n at z = 1, written out from its difference quotient.
BigRational difference_quotient(Preset preset, const BigRational& p, const BigRational& q, long n) {
  auto pw = [](const BigRational& x, long k) { return ipow(x, k); };
  switch (preset) {
    case Preset::heine: return (1 - pw(q, n)) / (1 - q);
    case Preset::quesne: return (1 - pw(q, -n)) / (q - 1);
    case Preset::biedenharn_macfarlane: return (pw(q, n) - pw(q, -n)) / (q - 1 / q);
    case Preset::jagannathan_srinivasa: return (pw(p, n) - pw(q, n)) / (p - q);
    case Preset::chakrabarty_jagannathan: return (pw(p, -n) - pw(q, n)) / (1 / p - q);
    case Preset::hounkonnou_ngompe: return (pw(p, n) - pw(q, -n)) / (q - 1 / p);
    case Preset::custom: break;
  }
  return 0;
}

}  // namespace

TEST_SUITE("deform") {
  TEST_CASE("documented examples") {
    auto js = make_params(Preset::jagannathan_srinivasa, 1, rat(1, 2));
    CHECK(rpq_number(js, 3) == rat(7, 4));
    CHECK(rpq_factorial(js, 3) == rat(21, 8));
    CHECK(rpq_binomial(js, 3, 1) == rat(7, 4));
    auto bm = make_params(Preset::biedenharn_macfarlane, 1, rat(1, 2));
    CHECK(rpq_number(bm, 2) == rat(5, 2));
    for (Preset preset : all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      CHECK(rpq_number(params, 0) == 0);
      CHECK(rpq_factorial(params, 0) == 1);
      CHECK(rpq_factorial(params, 1) == rpq_number(params, 1));
      CHECK(rpq_binomial(params, 7, 0) == 1);
    }
  }

  TEST_CASE("every preset matches its difference quotient for n <= 64") {
    for (auto [p, q] : {std::pair{rat(4, 5), rat(1, 2)}, std::pair{rat(1), rat(1, 3)}, std::pair{rat(9, 10), rat(2, 7)}}) {
      for (Preset preset : all_presets()) {
        auto params = make_params(preset, p, q);
        for (long n = 0; n <= 64; ++n) CHECK(rpq_number(params, n) == difference_quotient(preset, p, q, n));
      }
    }
  }

  TEST_CASE("factorial recursion and binomial identities") {
    for (Preset preset : all_presets()) {
      auto params = make_params(preset, rat(4, 5), rat(1, 2));
      for (long n = 1; n <= 30; ++n) CHECK(rpq_factorial(params, n) == rpq_number(params, n) * rpq_factorial(params, n - 1));
      for (int i = 0; i < 40; ++i) {
        long m = test::uniform(0, 20);
        long n = test::uniform(0, m);
        CHECK(rpq_binomial(params, m, n) == rpq_binomial(params, m, m - n));
        CHECK(rpq_binomial(params, m, n) * rpq_factorial(params, n) * rpq_factorial(params, m - n) ==
              rpq_factorial(params, m));
      }
    }
  }

  TEST_CASE("JS with p = 1 is the Heine q-number") {
    auto js = make_params(Preset::jagannathan_srinivasa, 1, rat(1, 2));
    auto heine = make_params(Preset::heine, 1, rat(1, 2));
    for (long n = 0; n <= 20; ++n) CHECK(rpq_number(js, n) == rpq_number(heine, n));
  }

  TEST_CASE("domain errors") {
    auto js = make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
    CHECK_THROWS_AS(rpq_binomial(js, 2, 3), InvalidParameter);
    CHECK_THROWS_AS(rpq_number(js, -1), InvalidParameter);
    CHECK_THROWS_AS(make_params(Preset::jagannathan_srinivasa, rat(1, 2), rat(1, 2)), InvalidParameter);
    CHECK_THROWS_AS(parse_preset("nope"), InvalidParameter);
    // R(1,1) != 0 is rejected.
    CHECK_THROWS_AS(StructureFunction::custom(LaurentPoly2({{0, 0, 1}}), LaurentPoly2({{0, 0, 1}})), InvalidParameter);
  }

  TEST_CASE("custom kernel reproduces a preset") {
    // (u - v)/(p - q) with p = 4/5, q = 1/2.
    auto custom = StructureFunction::custom(LaurentPoly2({{1, 0, 1}, {0, 1, -1}}), LaurentPoly2({{0, 0, rat(3, 10)}}));
    RationalParams c(custom, rat(4, 5), rat(1, 2));
    auto js = make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
    for (long n = 0; n <= 20; ++n) CHECK(rpq_number(c, n) == rpq_number(js, n));
  }

  TEST_CASE("positivity window rejects bindings with a non-positive number") {
    // (u - v)/(-3/10) is negative for p > q.
    auto negative = StructureFunction::custom(LaurentPoly2({{1, 0, 1}, {0, 1, -1}}), LaurentPoly2({{0, 0, rat(-3, 10)}}));
    CHECK_THROWS_AS(RationalParams(negative, rat(4, 5), rat(1, 2)), InvalidParameter);
    CHECK_NOTHROW(RationalParams(negative, rat(1, 2), rat(4, 5)));
    CHECK_THROWS_AS(make_params(Preset::jagannathan_srinivasa, rat(1, 2), rat(-1, 2)), InvalidParameter);
  }

  TEST_CASE("Biedenharn-Macfarlane identities") {
    Report r = bm_identity_suite(rat(1, 2), 2, 1);
    CHECK(r.all_asserted_pass());
    CHECK(bm_identity_suite(rat(1, 2), 5, 0).all_asserted_pass());
    auto bm = make_params(Preset::biedenharn_macfarlane, 1, rat(1, 2));
    CHECK(rpq_number(bm, 2) == rat(1, 2) + 2);
    for (long n = 2; n <= 8; ++n) {
      for (long m = 0; m <= 6; ++m) CHECK(bm_identity_suite(rat(3, 7), n, m).all_asserted_pass());
    }
  }

  TEST_CASE("classical limit gives the ordinary integers") {
    for (Preset preset : all_presets()) {
      auto c = RationalParams::classical(StructureFunction(preset), BigRational(1));
      for (long n = 0; n <= 12; ++n) CHECK(rpq_number(c, n) == n);
    }
  }
}
