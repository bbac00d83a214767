#pragma once

#include <string>
#include <vector>

#include "rpq/report.hpp"
#include "rpq/series/polynomial.hpp"

namespace rpq::spinzeta {

using series::Polynomial;

/// Rational function N(t)/D(t) in t = p^(-s) with exact coefficients, bound to a prime.
/// Kept gcd-reduced with D normalized to constant term one (or monic when D(0) = 0).
class LocalZetaRational {
 public:
  LocalZetaRational(Polynomial numerator, Polynomial denominator, long prime);
  static LocalZetaRational constant(const BigRational& c, long prime);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  long prime() const { return prime_; }

  /// Value at t; PoleError when D(t) = 0.
  BigRational at_t(const BigRational& t) const;
  /// Value at t = p^(-s) for an integer s.
  BigRational at_s(long s) const;

  friend LocalZetaRational operator*(const LocalZetaRational& x, const LocalZetaRational& y);
  friend LocalZetaRational operator/(const LocalZetaRational& x, const LocalZetaRational& y);
  friend LocalZetaRational operator+(const LocalZetaRational& x, const LocalZetaRational& y);
  friend LocalZetaRational operator-(const LocalZetaRational& x, const LocalZetaRational& y);
  friend bool operator==(const LocalZetaRational& x, const LocalZetaRational& y);

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
  long prime_;
};

/// zeta_p(m s - a) = 1/(1 - p^a t^m).  Needs m >= 1.
LocalZetaRational zeta_p_factor(long prime, long shift_a, long multiplier_m);

/// Z_f(s - 2) = (1 - p^-1)(1 - p^-1 t)/((1 - p t^2)(1 - p t)) for f = x3^2 + 4 x1 x2; p odd.
LocalZetaRational igusa_Zf(long prime);

/// zeta_p(s) zeta_p(s-1) zeta_p(s-2), the rank-3 abelian zeta function.
LocalZetaRational zeta_abelian_rank3(long prime);

/// zeta_p(s) zeta_p(s-1) zeta_p(2s-1) zeta_p(2s-2) / zeta_p(3s-1).
LocalZetaRational zeta_spin_half_rational(long prime);

/// zeta_(Z_p^3)(s) - Z_f(s-2) zeta_p(2s-2) p^((2-s)(i+1)) (1 - p^-1)^-1.
LocalZetaRational zeta_spin_half_subtraction(long prime, long i);

/// zeta_(Z_p^3)(s) - (1 - p^-1 t) p^2 t / ((1 - pt)(1 - p^2 t)(1 - pt^2)(1 - p^2 t^2)).
LocalZetaRational zeta_spin_half_intermediate(long prime);

/// The product form at an integer s.  A vanishing factor denominator raises PoleError naming
/// the factor.
BigRational zeta_spin_half(long prime, long s);

/// "zeta_p(ms - a)" with the shift written out, e.g. "zeta_p(2s-1)".
std::string factor_name(long shift_a, long multiplier_m);

enum class GhostGroup { go_odd, gsp, go_even_plus };
GhostGroup parse_ghost_group(const std::string& name);
std::string ghost_group_name(GhostGroup g);

/// Natural-boundary abscissa: l^2 - 1, l(l+1)/2 - 2, l(l-1)/2 - 2.  Needs l >= 1.
BigRational ghost_boundary(GhostGroup group, long l);

}  // namespace rpq::spinzeta
