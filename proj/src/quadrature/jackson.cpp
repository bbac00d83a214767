#include "rpq/quadrature/jackson.hpp"

#include <cmath>

#include "rpq/series/functions.hpp"

namespace rpq::quadrature {

namespace {

struct Bases {
  BigRational p;
  BigRational q;
};

/// (p, q) of the node formula; Heine is the p = 1 member of the family.
Bases node_bases(const RationalParams& params) {
  switch (params.structure().kind()) {
    case deform::Preset::jagannathan_srinivasa:
      return {params.p(), params.q()};
    case deform::Preset::heine:
      return {BigRational(1), params.q()};
    default:
      break;
  }
  throw InvalidParameter("Jackson node sums are available for the jagannathan_srinivasa and heine presets only, not " +
                         params.structure().name());
}

/// Bases ordered so that the node ratio small/large is below one in the selected regime.
Bases oriented(const QuadratureSpec& spec) {
  Bases b = node_bases(spec.params);
  BigRational ratio = spec.regime == Regime::q_over_p ? BigRational(b.q / b.p) : BigRational(b.p / b.q);
  if (abs(ratio) >= 1) {
    throw RegimeError("regime " + regime_name(spec.regime) + " needs a ratio below one, got " + to_string(ratio));
  }
  if (spec.regime == Regime::p_over_q) std::swap(b.p, b.q);
  return b;
}

long require_terms(const QuadratureSpec& spec) {
  if (!spec.terms) throw InvalidParameter("a term count is required for a black-box integrand");
  if (*spec.terms < 0) throw InvalidParameter("term count must be non-negative");
  return *spec.terms;
}

double to_double(const BigRational& x) { return x.get_d(); }

struct TailInputs {
  double scale;  // |p - q| M
  double big;    // |p| of the oriented pair
  double ratio;  // |q/p| of the oriented pair
};

TailInputs tail_inputs(const DecayCertificate& c, const QuadratureSpec& spec) {
  if (c.bound < 0) throw ConvergenceUnverified("decay certificate bound M must be non-negative");
  if (c.gamma_zero <= 0 || c.gamma_zero >= 1) {
    throw ConvergenceUnverified("decay certificate needs 0 < gamma_zero < 1");
  }
  Bases b = oriented(spec);
  return {std::fabs(to_double(b.p - b.q)) * to_double(c.bound), std::fabs(to_double(b.p)),
          std::fabs(to_double(b.q / b.p))};
}

}  // namespace

Regime parse_regime(std::string_view name) {
  if (name == "q_over_p" || name == "q/p") return Regime::q_over_p;
  if (name == "p_over_q" || name == "p/q") return Regime::p_over_q;
  throw InvalidParameter("unknown regime '" + std::string(name) + "'");
}

std::string regime_name(Regime r) { return r == Regime::q_over_p ? "q_over_p" : "p_over_q"; }

BigRational definite_integral_poly(const Polynomial& f, const BigRational& a, const BigRational& b,
                                   const RationalParams& params) {
  Polynomial F = series::rpq_antiderivative(f, params);
  return F.eval(b) - F.eval(a);
}

BigRational jackson_sum(const Function& f, const BigRational& a, const QuadratureSpec& spec) {
  Bases b = oriented(spec);
  const long terms = require_terms(spec);
  BigRational sum = 0;
  BigRational weight = 1 / b.p;  // q^r / p^(r+1)
  const BigRational step = b.q / b.p;
  for (long r = 0; r <= terms; ++r) {
    sum += weight * f(BigRational(weight * a));
    weight *= step;
  }
  return (b.p - b.q) * a * sum;
}

BigRational jackson_sum(const Polynomial& f, const BigRational& a, const QuadratureSpec& spec) {
  if (spec.terms) return jackson_sum(Function([&f](const BigRational& z) { return f.eval(z); }), a, spec);
  Bases b = oriented(spec);
  BigRational sum = 0;
  for (const auto& [n, c] : f.terms()) {
    sum += c * (b.p - b.q) * ipow(a, n + 1) / (ipow(b.p, n + 1) - ipow(b.q, n + 1));
  }
  return sum;
}

double zero_side_tail_bound(const DecayCertificate& certificate, const QuadratureSpec& spec) {
  const long terms = require_terms(spec);
  TailInputs t = tail_inputs(certificate, spec);
  // Nodes z_j = r^j / p for j > terms; |w_j f(z_j)| <= |p - q| M z_j^(1 - gamma).
  const double e = 1.0 - to_double(certificate.gamma_zero);
  return t.scale * std::pow(t.big, -e) * std::pow(t.ratio, static_cast<double>(terms + 1) * e) /
         (1.0 - std::pow(t.ratio, e));
}

double infinity_side_tail_bound(const DecayCertificate& certificate, const QuadratureSpec& spec) {
  const long terms = require_terms(spec);
  if (!certificate.gamma_infinity || *certificate.gamma_infinity <= 1) {
    throw ConvergenceUnverified("decay certificate needs gamma_infinity > 1 to bound the far tail");
  }
  TailInputs t = tail_inputs(certificate, spec);
  const double e = to_double(*certificate.gamma_infinity) - 1.0;
  return t.scale * std::pow(t.big, e) * std::pow(t.ratio, static_cast<double>(terms + 1) * e) /
         (1.0 - std::pow(t.ratio, e));
}

ImproperResult improper_integral(const Function& f, const QuadratureSpec& spec,
                                 const std::optional<DecayCertificate>& certificate) {
  if (!certificate) throw ConvergenceUnverified("improper integral needs a decay certificate");
  ImproperResult out;
  out.terms = require_terms(spec);
  out.zero_tail_bound = zero_side_tail_bound(*certificate, spec);
  out.infinity_tail_bound = infinity_side_tail_bound(*certificate, spec);
  Bases b = oriented(spec);
  const BigRational step = b.q / b.p;
  const BigRational inv = b.p / b.q;
  BigRational weight = 1 / b.p;
  for (long j = 0; j <= out.terms; ++j) {
    out.near_part += weight * f(weight);
    weight *= step;
  }
  weight = 1 / b.q;  // j = -1
  for (long j = 1; j <= out.terms; ++j) {
    out.far_part += weight * f(weight);
    weight *= inv;
  }
  out.near_part *= b.p - b.q;
  out.far_part *= b.p - b.q;
  out.value = out.near_part + out.far_part;
  return out;
}

Report integration_by_parts_check(const Polynomial& f, const Polynomial& g, const BigRational& a,
                                  const BigRational& b, const RationalParams& params) {
  Report r;
  r.suite = "integration_by_parts";
  auto sp = params.shift_pair();
  const BigRational alpha = sp ? sp->alpha : params.p();
  const BigRational beta = sp ? sp->beta : params.q();
  Polynomial lhs_integrand = f.scaled_argument(alpha) * series::rpq_derivative(g, params);
  Polynomial rhs_integrand = g.scaled_argument(beta) * series::rpq_derivative(f, params);
  BigRational lhs = definite_integral_poly(lhs_integrand, a, b, params);
  BigRational rhs = f.eval(b) * g.eval(b) - f.eval(a) * g.eval(a) - definite_integral_poly(rhs_integrand, a, b, params);
  BigRational residual = lhs - rhs;
  std::string detail = "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs) + " shifts=(" + to_string(alpha) + ", " +
                       to_string(beta) + ")";
  IdentityCheck c{"int f(alpha z) dg = [fg] - int g(beta z) df", sp.has_value(), residual == 0, to_string(residual),
                  detail};
  r.add(c);
  return r;
}

}  // namespace rpq::quadrature
