#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpq/deform/params.hpp"
#include "rpq/report.hpp"
#include "rpq/series/formal_series.hpp"
#include "rpq/series/polynomial.hpp"

namespace rpq::series {

using deform::RationalParams;

/// Spectral derivative: z^n -> [n] z^(n-1).
Polynomial rpq_derivative(const Polynomial& f, const RationalParams& params);
/// Plain series lose their top coefficient; factorial-normalized series shift left.
FormalSeries rpq_derivative(const FormalSeries& f, const RationalParams& params);

/// z^n -> z^(n+1)/[n+1], constant of integration 0.  Throws SingularityError if [n+1] = 0.
Polynomial rpq_antiderivative(const Polynomial& f, const RationalParams& params);
FormalSeries rpq_antiderivative(const FormalSeries& f, const RationalParams& params);

/// [0]!..[order]!.
std::vector<BigRational> factorial_table(const RationalParams& params, long order);

/// e_R(z) = sum xi1^C(n,2) z^n/[n]! (plain coefficients).
FormalSeries exp_lower(const RationalParams& params, long order);
/// E_R(z) = sum xi2^C(n,2) z^n/[n]! (plain coefficients).
FormalSeries exp_upper(const RationalParams& params, long order);

enum class Convention { lower, upper };

/// Names: sin cos sinh cosh tan sec csc tanh coth sech (from e_R) and their upper-case forms
/// (from E_R).  sin/cos are the odd/even parts of the exponential at iz, sinh/cosh those
/// at z; sec = 1/cos, sech = 1/cosh, csc = 1/sin, coth = cosh/sinh.  csc and coth have a
/// pole at the origin and need laurent = true, which returns a series with leading
/// exponent -1.
FormalSeries trig_series(const RationalParams& params, std::string_view which, long order, bool laurent = false);

/// A_0..A_{count-1}: factorial-normalized coefficients of sec_R + tan_R.
std::vector<BigRational> zigzag_numbers(const RationalParams& params, long count);

enum class Family { bernoulli, euler, genocchi };

Family parse_family(std::string_view name);
std::string family_name(Family f);

/// Values P_0(x)..P_order(x) of the family, extracted as factorial-normalized coefficients of
///   bernoulli: z e(xz)/(e(z) - 1),  euler: [2] e(xz)/(e(z) + 1),  genocchi: [2] z e(xz)/(e(z) + 1)
/// where e is e_R (lower) or E_R (upper).
std::vector<BigRational> generating_polynomials(const RationalParams& params, Family family, const BigRational& x,
                                                long order, Convention convention = Convention::lower);

/// Factorial-normalized coefficients of [2]/(e(z) + e(-z)) = ([2]/2) sech_R(z).
std::vector<BigRational> euler_star_numbers(const RationalParams& params, long order,
                                            Convention convention = Convention::lower);

/// Checks A^+A z^n = [n] z^n, AA^+ z^n = [n+1] z^n and their commutator for n <= n_max,
/// with A the deformed derivative and A^+ multiplication by z.
Report operator_algebra_check(const RationalParams& params, long n_max);

}  // namespace rpq::series
