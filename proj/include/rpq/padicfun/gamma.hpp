#pragma once

#include "rpq/padicfun/twist.hpp"
#include "rpq/report.hpp"

namespace rpq::padicfun {

/// Product of [j] over 0 < j < n with p not dividing j.  Needs n >= 0.
PadicNumber padic_factorial_rpq(long n, const TwistParams& tw);

/// Gamma^p(n) = (-1)^n (n!)^p for n >= 0; negative integers through Gamma(z) = Gamma(z+1)/delta(z).
PadicNumber padic_gamma_rpq(long n, const TwistParams& tw);

/// -[z] for a p-adic unit z, -1 otherwise.
PadicNumber delta_factor(long z, const TwistParams& tw);

/// Gamma^p(x) Gamma^p(y) / Gamma^p(x + y).
PadicNumber padic_beta_rpq(long x, long y, const TwistParams& tw);

/// Gamma^p at x in Z_p through its digit truncations n_k = x mod p^k, k = 1..levels.
LimitReport padic_gamma_limit(const PadicNumber& x, long levels, const TwistParams& tw);

/// Factorial decomposition, telescoped digit-sum form at the base and p-th power twists,
/// product-ratio identity and the product rule, for one n >= 1.
Report factorial_decomposition_check(long n, const TwistParams& tw);

/// Values at 0 and 1, unit norm, recurrence, Morita regression and the decomposition for n <= max_n.
Report padic_gamma_suite(const TwistParams& tw, long max_n = 30);

/// Beta properties at integer samples.
Report padic_beta_suite(const TwistParams& tw);

}  // namespace rpq::padicfun
