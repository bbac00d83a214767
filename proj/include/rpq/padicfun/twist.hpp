#pragma once

#include <string>
#include <vector>

#include "rpq/arith/padic.hpp"
#include "rpq/deform/params.hpp"

namespace rpq::padicfun {

/// Extra p-adic digits carried internally above the requested precision.
inline constexpr long kGuardDigits = 10;

using PadicParams = deform::DeformParams<PadicNumber>;

/// Twist (rho, q) in Z_p with |rho - 1|_p < 1 and |q - 1|_p < 1, bound to a structure function.
///
/// rho and q are kept as exact rationals so that any working precision can be produced on
/// demand.  rho = q = 1 is the classical limit; rho = 1 != q is the one-parameter case.
class TwistParams {
 public:
  TwistParams(long prime, BigRational rho, BigRational q, long precision = 16,
              deform::StructureFunction structure = deform::StructureFunction());
  static TwistParams classical(long prime, long precision = 16,
                               deform::StructureFunction structure = deform::StructureFunction());

  long prime() const { return prime_; }
  /// Requested precision N in p-adic digits.
  long precision() const { return precision_; }
  long working_precision() const { return precision_ + kGuardDigits; }
  const BigRational& rho_rational() const { return rho_; }
  const BigRational& q_rational() const { return q_; }
  const deform::StructureFunction& structure() const { return structure_; }
  bool classical_limit() const { return rho_ == 1 && q_ == 1; }

  /// The binding at working precision.
  const PadicParams& params() const { return params_; }
  /// The binding with rho, q lifted to the given relative precision.
  PadicParams binding(long digits) const;

  PadicNumber lift(const BigRational& x) const { return PadicNumber::from_rational(x, prime_, working_precision()); }
  PadicNumber rho() const { return params_.p(); }
  PadicNumber q() const { return params_.q(); }

  /// [n] for an integer n (any sign).
  PadicNumber number(long n) const { return params_.number(n); }
  /// [x] = c (alpha^x - beta^x)/(alpha - beta) for x in Z_p via p-adic exp/log; x itself in the
  /// classical limit.  Needs the Volkenborn-strength bounds.
  PadicNumber number_at(const PadicNumber& x) const;

  /// (rho^k, q^k) with the same structure and precision.
  TwistParams powered(long k) const;
  /// Same twist at another precision.
  TwistParams with_precision(long digits) const;

  /// Throws ConvergenceDomainError unless v(rho - 1), v(q - 1) > 1/(p - 1).
  void require_volkenborn() const;
  bool volkenborn_ready() const;

  std::string describe() const;

 private:
  long prime_;
  BigRational rho_;
  BigRational q_;
  long precision_;
  deform::StructureFunction structure_;
  PadicParams params_;
};

/// A p-adic limit evaluated at successive levels.
struct LimitReport {
  std::vector<long> levels;
  std::vector<PadicNumber> values;
  /// v(S_(k+1) - S_k), capped by the joint absolute precision.
  std::vector<long> difference_valuations;
  /// Difference valuations strictly increase, except where two values agree to all known digits.
  bool converged = false;
  /// Digits of the last value certified by the last difference.
  long certified_digits = 0;
  PadicNumber value;
};

/// Fills converged/certified_digits/value from levels and values.
void finish_limit(LimitReport& report);

/// Relative agreement: v(a - b) >= min(v(a), v(b)) + digits.
bool agrees_relative(const PadicNumber& a, const PadicNumber& b, long digits);
/// "v>=k" with k = v(a - b).
std::string valuation_residual(const PadicNumber& a, const PadicNumber& b);

}  // namespace rpq::padicfun
