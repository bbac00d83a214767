#pragma once

#include <functional>
#include <vector>

#include "rpq/padicfun/twist.hpp"
#include "rpq/report.hpp"

namespace rpq::padicfun {

/// Default number of partition levels for Volkenborn limits.
inline constexpr long kDefaultLevels = 6;

/// Integrand sampled at the integers 0..p^N - 1.
using IntegerFunction = std::function<PadicNumber(long)>;

/// The partition of Z_p into p^N classes a + p^N Z_p, with the measure of every class.
class VolkenbornLevel {
 public:
  /// kappa scales every weight; it is one for the (rho, q) measure.
  VolkenbornLevel(long level, const TwistParams& tw, const BigRational& kappa = 1);

  long level() const { return level_; }
  long classes() const { return static_cast<long>(weights_.size()); }
  /// mu(a + p^N Z_p) for 0 <= a < p^N.
  const PadicNumber& weight(long a) const;
  const std::vector<PadicNumber>& weights() const { return weights_; }

 private:
  long level_;
  std::vector<PadicNumber> weights_;
};

/// mu(a + p^N Z_p) = rho^(p^N)/[p^N] (q/rho)^a kappa.  Needs 0 <= a < p^N.
PadicNumber volkenborn_measure(long a, long level, const TwistParams& tw, const BigRational& kappa = 1);

/// The same class with the printed ratio (rho/q)^a, kept for comparison.
PadicNumber volkenborn_measure_printed(long a, long level, const TwistParams& tw);

/// Riemann sum of f against the level-N measure.
PadicNumber volkenborn_sum(const IntegerFunction& f, const VolkenbornLevel& level);

/// Riemann sums for N = 1..levels with the successive-difference certificate.
/// Throws NoConvergence if require_convergence is set and the differences do not grow.
LimitReport volkenborn_integral(const IntegerFunction& f, long levels, const TwistParams& tw,
                                bool require_convergence = false);

/// B_(n;a)(x) = integral of rho^(a t) [x + t]^n, evaluated at every level by direct
/// summation and by the binomial expansion over the moments of [t]^r.
struct CarlitzResult {
  LimitReport direct;
  LimitReport binomial;
};
CarlitzResult carlitz_bernoulli(long n, const BigRational& a, const PadicNumber& x, const TwistParams& tw,
                                long levels = kDefaultLevels);

/// sum_(x < p^N) (-1)^x f(x) for N = 1..levels; p must be odd.
LimitReport fermionic_integral(const IntegerFunction& f, long levels, long prime, long precision);

/// Distribution relation, total mass, classical moments, the shift identity and Carlitz checks.
Report volkenborn_suite(const TwistParams& tw, long levels = kDefaultLevels);

/// Fermionic integral checks at an odd prime.
Report fermionic_suite(long prime, long precision, long levels = kDefaultLevels);

}  // namespace rpq::padicfun
