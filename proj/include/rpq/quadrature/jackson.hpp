#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "rpq/deform/params.hpp"
#include "rpq/report.hpp"
#include "rpq/series/polynomial.hpp"

namespace rpq::quadrature {

using deform::RationalParams;
using series::Polynomial;

/// Which geometric ratio is below one: nodes q^r a/p^(r+1) need |q/p| < 1, the mirrored
/// nodes p^r a/q^(r+1) need |p/q| < 1.
enum class Regime { q_over_p, p_over_q };

Regime parse_regime(std::string_view name);
std::string regime_name(Regime r);

struct QuadratureSpec {
  RationalParams params;
  /// Number of geometric terms r = 0..terms; nullopt selects the exact closed form
  /// (polynomial integrands only).
  std::optional<long> terms;
  Regime regime = Regime::q_over_p;
};

using Function = std::function<BigRational(const BigRational&)>;

/// I f(b) - I f(a) through the exact antiderivative.
BigRational definite_integral_poly(const Polynomial& f, const BigRational& a, const BigRational& b,
                                   const RationalParams& params);

/// (p - q) a sum_{r=0}^{terms} q^r/p^(r+1) f(q^r a/p^(r+1)) (or the mirrored sum).
/// Jagannathan-Srinivasa and Heine bindings only; Heine uses p = 1.
BigRational jackson_sum(const Function& f, const BigRational& a, const QuadratureSpec& spec);

/// Polynomial integrand; spec.terms = nullopt gives the infinite sum in closed form,
/// sum_n c_n (p - q) a^(n+1)/(p^(n+1) - q^(n+1)).
BigRational jackson_sum(const Polynomial& f, const BigRational& a, const QuadratureSpec& spec);

/// |f(z) z^gamma_zero| <= M on nodes near 0 and |f(z) z^gamma_infinity| <= M on large nodes.
/// 0 < gamma_zero < 1 is required; gamma_infinity > 1 is needed to bound the far tail.
struct DecayCertificate {
  BigRational bound;
  BigRational gamma_zero;
  std::optional<BigRational> gamma_infinity;
};

struct ImproperResult {
  BigRational value;
  /// Nodes with j >= 0 (inside (0, 1/p]) and j < 0 respectively.
  BigRational near_part;
  BigRational far_part;
  long terms = 0;
  double zero_tail_bound = 0;
  double infinity_tail_bound = 0;
};

/// Bound on the j > terms part of the bilateral sum implied by the certificate.
double zero_side_tail_bound(const DecayCertificate& certificate, const QuadratureSpec& spec);
/// Bound on the j < -terms part; requires gamma_infinity.
double infinity_side_tail_bound(const DecayCertificate& certificate, const QuadratureSpec& spec);

/// (p - q) sum_{j=-terms}^{terms} q^j/p^(j+1) f(q^j/p^(j+1)) with both tail bounds.
/// Throws ConvergenceUnverified unless a certificate with valid exponents on both sides is given.
ImproperResult improper_integral(const Function& f, const QuadratureSpec& spec,
                                 const std::optional<DecayCertificate>& certificate);

/// int_a^b f(alpha z) d_R g = f g |_a^b - int_a^b g(beta z) d_R f with (alpha, beta) the
/// binding's shift pair, which is (p, q) for the Jagannathan-Srinivasa preset.  Exact for
/// every preset; for custom kernels the pair (p, q) is used and the residual only measured.
Report integration_by_parts_check(const Polynomial& f, const Polynomial& g, const BigRational& a,
                                  const BigRational& b, const RationalParams& params);

}  // namespace rpq::quadrature
