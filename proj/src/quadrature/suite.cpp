#include "rpq/quadrature/jackson.hpp"
#include "rpq/series/functions.hpp"
#include "rpq/suites.hpp"

namespace rpq {

namespace {

using quadrature::QuadratureSpec;
using quadrature::Regime;
using series::Polynomial;

Polynomial sample_polynomial(long degree, long seed) {
  std::vector<BigRational> c(static_cast<std::size_t>(degree + 1));
  for (long i = 0; i <= degree; ++i) {
    c[static_cast<std::size_t>(i)] = BigRational(BigRational((seed * 13 + i * 7) % 17 - 8) / ((seed + i) % 5 + 1));
  }
  if (c.back() == 0) c.back() = 1;
  return Polynomial::from_coefficients(c);
}

void calculus_checks(Report& r, const deform::RationalParams& params) {
  const std::string name = params.structure().name();
  const BigRational a(-1, 2);
  const BigRational b(3, 4);
  bool ftc = true;
  bool additive = true;
  for (long deg = 0; deg <= 12; ++deg) {
    Polynomial f = sample_polynomial(deg, deg + 1);
    BigRational lhs = quadrature::definite_integral_poly(series::rpq_derivative(f, params), a, b, params);
    ftc = ftc && lhs == f.eval(b) - f.eval(a);
    BigRational whole = quadrature::definite_integral_poly(f, a, b, params);
    additive = additive && whole == quadrature::definite_integral_poly(f, 0, b, params) -
                                        quadrature::definite_integral_poly(f, 0, a, params);
  }
  r.asserted(name + ": int_a^b d f = f(b) - f(a) for degree <= 12", ftc);
  r.asserted(name + ": int_a^b = int_0^b - int_0^a for degree <= 12", additive);
  r.asserted(name + ": int_a^a f = 0", quadrature::definite_integral_poly(sample_polynomial(5, 2), a, a, params) == 0);

  r.merge(quadrature::integration_by_parts_check(Polynomial::z(), Polynomial::z(), 0, 1, params), name + ": f=g=z: ");
  r.merge(quadrature::integration_by_parts_check(sample_polynomial(3, 4), sample_polynomial(3, 9), a, b, params),
          name + ": cubic pair: ");
  r.merge(quadrature::integration_by_parts_check(Polynomial(BigRational(5, 2)), sample_polynomial(4, 1), a, b, params),
          name + ": constant f: ");
}

void jackson_checks(Report& r, const QuadratureSpec& spec) {
  const auto& params = spec.params;
  const std::string tag = params.structure().name() + " " + quadrature::regime_name(spec.regime) + ": ";
  const BigRational a(2, 3);
  bool closed = true;
  bool truncated = true;
  QuadratureSpec finite = spec;
  finite.terms = 200;
  for (long n = 0; n <= 8; ++n) {
    Polynomial f = Polynomial::monomial(n);
    const BigRational exact = ipow(a, n + 1) / params.number(n + 1);
    closed = closed && quadrature::jackson_sum(f, a, spec) == exact;
    truncated = truncated && within_relative(BigRational(quadrature::jackson_sum(f, a, finite) - exact), exact, 30);
  }
  r.asserted(tag + "closed-form node sum of z^n equals a^(n+1)/[n+1] for n <= 8", closed);
  r.asserted(tag + "200-term node sum within 1e-30 relative for n <= 8", truncated);

  Polynomial f = sample_polynomial(6, 3);
  r.asserted(tag + "closed-form node sum equals the antiderivative route",
             quadrature::jackson_sum(f, a, spec) == quadrature::definite_integral_poly(f, 0, a, params));

  // Each geometric sub-interval contributes exactly its node.
  const auto& b = params.structure().kind() == deform::Preset::heine ? BigRational(1) : params.p();
  BigRational big = spec.regime == Regime::q_over_p ? b : params.q();
  BigRational small = spec.regime == Regime::q_over_p ? params.q() : b;
  bool telescoping = true;
  for (long j = 0; j <= 5; ++j) {
    BigRational upper = ipow(BigRational(small / big), j);
    BigRational lower = upper * small / big;
    BigRational node = upper / big;
    BigRational lhs = quadrature::definite_integral_poly(f, lower, upper, params);
    BigRational rhs = (big - small) * node * f.eval(node);
    telescoping = telescoping && lhs == rhs;
  }
  r.asserted(tag + "sub-interval [r^(j+1), r^j] integral equals its node value for j <= 5", telescoping);
}

}  // namespace

Report run_quadrature_suite(const SuiteContext& ctx) {
  Report r;
  r.suite = "quadrature";
  for (deform::Preset preset : deform::all_presets()) {
    try {
      calculus_checks(r, deform::make_params(preset, ctx.params.p(), ctx.params.q()));
    } catch (const InvalidParameter& e) {
      r.measured(deform::preset_name(preset) + ": binding at the suite parameters", false, {}, e.what());
    }
  }

  if (ctx.params.classical_limit()) {
    r.measured("Jackson node sums", true, {}, "skipped: the node ratio q/p is one in the classical limit");
    return r;
  }

  const BigRational& p = ctx.params.p();
  const BigRational& q = ctx.params.q();
  const bool q_small = abs(q) < abs(p);
  auto js = deform::make_params(deform::Preset::jagannathan_srinivasa, p, q);
  QuadratureSpec spec{js, std::nullopt, q_small ? Regime::q_over_p : Regime::p_over_q};
  jackson_checks(r, spec);
  auto mirrored = deform::make_params(deform::Preset::jagannathan_srinivasa, q, p);
  jackson_checks(r, QuadratureSpec{mirrored, std::nullopt, q_small ? Regime::p_over_q : Regime::q_over_p});
  if (q != 1) jackson_checks(r, QuadratureSpec{deform::make_params(deform::Preset::heine, 1, q), std::nullopt,
                                               abs(q) < 1 ? Regime::q_over_p : Regime::p_over_q});

  bool regime_error = false;
  try {
    QuadratureSpec wrong = spec;
    wrong.regime = q_small ? Regime::p_over_q : Regime::q_over_p;
    quadrature::jackson_sum(Polynomial::z(), 1, wrong);
  } catch (const RegimeError&) {
    regime_error = true;
  }
  r.asserted("jackson_sum in the wrong regime raises a regime error", regime_error);

  // Improper integral of 1/(1+z)^2 with |f z^(1/2)| <= 1 and |f z^(3/2)| <= 1.
  quadrature::Function f = [](const BigRational& z) { return BigRational(1 / ((1 + z) * (1 + z))); };
  quadrature::DecayCertificate cert{1, BigRational(1, 2), BigRational(3, 2)};
  double previous_zero = 1e300;
  double previous_inf = 1e300;
  bool decreasing = true;
  bool splitting = true;
  for (long terms : {10L, 20L, 40L}) {
    QuadratureSpec s = spec;
    s.terms = terms;
    auto res = quadrature::improper_integral(f, s, cert);
    decreasing = decreasing && res.zero_tail_bound < previous_zero && res.infinity_tail_bound < previous_inf;
    previous_zero = res.zero_tail_bound;
    previous_inf = res.infinity_tail_bound;
    splitting = splitting && res.value == res.near_part + res.far_part;
  }
  r.asserted("improper integral: tail bounds decrease with the term count", decreasing);
  r.asserted("improper integral: bilateral sum = near part + far part", splitting);
  QuadratureSpec s = spec;
  s.terms = 20;
  auto zero = quadrature::improper_integral([](const BigRational&) { return BigRational(0); }, s, cert);
  r.asserted("improper integral of 0 is 0", zero.value == 0);
  bool unverified = false;
  try {
    quadrature::improper_integral(f, s, std::nullopt);
  } catch (const ConvergenceUnverified&) {
    unverified = true;
  }
  r.asserted("improper integral without a certificate raises convergence-unverified", unverified);
  return r;
}

}  // namespace rpq
