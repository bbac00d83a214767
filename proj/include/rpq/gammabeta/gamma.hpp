#pragma once

#include <optional>

#include "rpq/arith/highfloat.hpp"
#include "rpq/deform/params.hpp"
#include "rpq/report.hpp"

namespace rpq::gammabeta {

using deform::RationalParams;

inline constexpr long kDefaultTruncation = 256;

/// Value of a gamma or beta evaluation.  Integer arguments carry the exact rational; other
/// arguments carry the truncated product and a bound on its relative error.
struct GammaValue {
  std::optional<BigRational> exact;
  HighFloat value;
  long truncation = 0;
  /// |true/computed - 1| <= relative_tail_bound.
  HighFloat relative_tail_bound = 0;
};

/// The ratio-of-products gamma function.
///
/// Positive integers n + 1 take the finite path prod_{k<=n} (xi1^k - xi2^k)/(xi1 - xi2),
/// which equals (xi1 (-) xi2)^n/(xi1 - xi2)^n.  Other arguments are evaluated as
///   xi1^((z-1)(z-2)/2) (1 - r)^(1-z) prod_{i<M} (1 - r^(i+1))/(1 - r^(z+i)),  r = xi2/xi1,
/// which pairs the divergent xi1 powers factor by factor and needs 0 < r < 1.  In the
/// classical limit non-integer arguments use the ordinary gamma function.
/// Non-positive integers throw PoleError; r outside (0, 1) throws ConvergenceDomainError.
GammaValue gamma_rpq(const BigRational& z, const RationalParams& params, long truncation = kDefaultTruncation);

/// Gamma(x) Gamma(y) / Gamma(x + y).
GammaValue beta_rpq(const BigRational& x, const BigRational& y, const RationalParams& params,
                    long truncation = kDefaultTruncation);

/// (xi1^z - xi2^z)/(xi1 - xi2) scaled like the binding's numbers: the factor relating
/// Gamma(z+1) to Gamma(z).  Equals [n] at integers; z in the classical limit.
HighFloat deformed_number_real(const BigRational& z, const RationalParams& params);

/// Gamma recurrence, integer link, beta recurrences and the classical-limit facts.
Report gamma_identity_suite(const RationalParams& params);

}  // namespace rpq::gammabeta
