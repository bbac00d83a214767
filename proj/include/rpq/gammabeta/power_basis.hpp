#pragma once

#include "rpq/deform/params.hpp"
#include "rpq/report.hpp"
#include "rpq/series/polynomial.hpp"

namespace rpq::gammabeta {

using deform::DeformParams;
using deform::RationalParams;
using series::Polynomial;

/// minus selects (x (-) y)^n, plus selects (x (+) y)^n.
enum class Sign { minus, plus };

/// prod_{i<n} (x xi1^i -/+ y xi2^i).  For n < 0 the reciprocal form
/// 1/(x xi1^(-n) (-/+) y xi2^(-n))^(-n) is used; a zero factor there throws DivisionByZero.
template <Scalar S>
S power_basis(const S& x, const S& y, long n, Sign mode, const DeformParams<S>& params) {
  if (n < 0) {
    const long m = -n;
    S denom = power_basis(S(x * power(params.xi1(), n)), S(y * power(params.xi2(), n)), m, mode, params);
    if (is_zero_scalar(denom)) throw DivisionByZero("zero factor in a reciprocal power basis");
    return lift_like(x, BigRational(1)) / denom;
  }
  S out = lift_like(x, BigRational(1));
  S a = x;
  S b = y;
  for (long i = 0; i < n; ++i) {
    out = out * (mode == Sign::minus ? S(a - b) : S(a + b));
    a = a * params.xi1();
    b = b * params.xi2();
  }
  return out;
}

/// (c x (-) a)^n as a polynomial in x, i.e. prod_{i<n} (c xi1^i x - a xi2^i).
Polynomial power_basis_polynomial(const BigRational& c, const BigRational& a, long n, const RationalParams& params);

/// (a (-) c x)^n as a polynomial in x, i.e. prod_{i<n} (a xi1^i - c xi2^i x).
Polynomial reverse_power_basis_polynomial(const BigRational& a, const BigRational& c, long n,
                                          const RationalParams& params);

/// True when (xi1, xi2) equal the preset's shift pair, which is what the power-basis
/// derivative rules need.
bool twist_is_shift(const RationalParams& params);

/// Splitting, quotient, doubling and k-fold identities of the power basis at sample points,
/// exact in rational arithmetic.
Report power_basis_identity_suite(const RationalParams& params, long n, long k);

/// Derivative rules of the power basis on expanded polynomials, the reciprocal rules at
/// sample points, and the exponential derivative rules at coefficient level.
Report power_basis_derivative_suite(const RationalParams& params, long n, long k);

}  // namespace rpq::gammabeta
