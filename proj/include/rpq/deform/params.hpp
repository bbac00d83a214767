#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>

#include "rpq/deform/structure.hpp"
#include "rpq/report.hpp"

namespace rpq::deform {

/// Window n = 1..K over which R(p^n, q^n) > 0 is checked when rational parameters are bound.
inline constexpr long kPositivityWindow = 64;

/// A structure function bound to parameters (p, q) and twist bases (xi1, xi2).
///
/// The twist bases default to the preset's shift pair (alpha, beta) with
/// [n] = c (alpha^n - beta^n)/(alpha - beta); for the Jagannathan-Srinivasa preset that is
/// (p, q), and it is the choice under which the factorial link
/// [n]! = (xi1 (-) xi2)^n / (xi1 - xi2)^n holds whenever c = 1.  Custom kernels default to (p, q).
///
/// p = q is accepted only as the classical limit p = q = 1 of a preset.
template <Scalar S>
class DeformParams {
 public:
  DeformParams(StructureFunction structure, S p, S q, std::optional<S> xi1 = std::nullopt,
               std::optional<S> xi2 = std::nullopt)
      : structure_(std::move(structure)), p_(std::move(p)), q_(std::move(q)) {
    const S one = lift_like(p_, BigRational(1));
    classical_ = (p_ == one) && (q_ == one);
    if (classical_ && structure_.is_custom()) {
      throw InvalidParameter("the classical limit p = q = 1 is only defined for presets");
    }
    if (!classical_ && p_ == q_ && !structure_.ignores_p()) {
      throw InvalidParameter("p and q must differ (p = q is allowed only as p = q = 1)");
    }
    if (is_zero_scalar(p_) || is_zero_scalar(q_)) throw InvalidParameter("p and q must be nonzero");
    if constexpr (std::is_same_v<S, BigRational>) {
      if (p_ <= 0 || q_ <= 0) throw InvalidParameter("p and q must be positive");
    }
    auto sp = structure_.shift_pair(p_, q_);
    xi1_ = xi1 ? *xi1 : (sp ? sp->alpha : p_);
    xi2_ = xi2 ? *xi2 : (sp ? sp->beta : q_);
    if constexpr (std::is_same_v<S, BigRational>) {
      for (long n = 1; n <= kPositivityWindow; ++n) {
        if (number(n) <= 0) {
          throw InvalidParameter(structure_.name() + ": R(p^n, q^n) is not positive at n = " + std::to_string(n));
        }
      }
    }
  }

  /// The classical limit p = q = 1 of a preset, with xi1 = xi2 = 1.
  static DeformParams classical(StructureFunction structure, const S& like) {
    S one = lift_like(like, BigRational(1));
    return DeformParams(std::move(structure), one, one, one, one);
  }

  const StructureFunction& structure() const { return structure_; }
  const S& p() const { return p_; }
  const S& q() const { return q_; }
  const S& xi1() const { return xi1_; }
  const S& xi2() const { return xi2_; }
  bool classical_limit() const { return classical_; }

  /// [n] = R(p^n, q^n).
  S number(long n) const { return structure_.number(n, p_, q_); }

  S factorial(long n) const {
    S f = lift_like(p_, BigRational(1));
    for (long k = 1; k <= n; ++k) f = f * number(k);
    return f;
  }

  /// The shift pair of a preset binding; nullopt for custom kernels.
  std::optional<ShiftPair<S>> shift_pair() const { return structure_.shift_pair(p_, q_); }

  /// True when the twist bases equal the shift pair and the scale is one, i.e. when
  /// [n] = (xi1^n - xi2^n)/(xi1 - xi2).
  bool twist_matches_shift() const {
    auto sp = shift_pair();
    if (!sp) return false;
    return sp->alpha == xi1_ && sp->beta == xi2_ && sp->scale == lift_like(p_, BigRational(1));
  }

  /// The binding (p^k, q^k) with twist bases (xi1^k, xi2^k), i.e. R(p^k, q^k).
  DeformParams powered(long k) const {
    DeformParams out = *this;
    out.p_ = power(p_, k);
    out.q_ = power(q_, k);
    out.xi1_ = power(xi1_, k);
    out.xi2_ = power(xi2_, k);
    return out;
  }

  DeformParams with_twist(S xi1, S xi2) const {
    DeformParams out = *this;
    out.xi1_ = std::move(xi1);
    out.xi2_ = std::move(xi2);
    return out;
  }

 private:
  StructureFunction structure_;
  S p_;
  S q_;
  S xi1_;
  S xi2_;
  bool classical_ = false;
};

using RationalParams = DeformParams<BigRational>;

/// Convenience binding of a preset to rational parameters.
RationalParams make_params(Preset preset, const BigRational& p, const BigRational& q);

template <Scalar S>
S rpq_number(const DeformParams<S>& params, long n) {
  if (n < 0) throw InvalidParameter("rpq_number needs n >= 0");
  return params.number(n);
}

template <Scalar S>
S rpq_factorial(const DeformParams<S>& params, long n) {
  if (n < 0) throw InvalidParameter("rpq_factorial needs n >= 0");
  return params.factorial(n);
}

template <Scalar S>
S rpq_binomial(const DeformParams<S>& params, long m, long n) {
  if (n < 0 || n > m) throw InvalidParameter("rpq_binomial needs 0 <= n <= m");
  const long k = std::min(n, m - n);
  if constexpr (std::is_same_v<S, BigRational>) {
    // prod [m-k+i]/[i] with numerators and denominators kept apart and reduced once.
    BigInt top = 1, bottom = 1;
    for (long i = 1; i <= k; ++i) {
      const BigRational a = params.number(m - k + i);
      const BigRational b = params.number(i);
      top *= a.get_num() * b.get_den();
      bottom *= a.get_den() * b.get_num();
    }
    if (bottom == 0) throw SingularityError("rpq_binomial: a deformed number vanishes");
    BigRational out(top, bottom);
    out.canonicalize();
    return out;
  } else {
    S out = lift_like(params.p(), BigRational(1));
    for (long i = 1; i <= k; ++i) out = out * params.number(m - k + i) / params.number(i);
    return out;
  }
}

/// Biedenharn-Macfarlane identities at (n, m):
/// [n+m] = q^(-m)[n] + q^n[m], [-m] = -[m], [n] = [2][n-1] - [n-2].
Report bm_identity_suite(const BigRational& q, long n, long m);

/// Closed-form quotient oracle for a preset: R(p^n, q^n) evaluated from the printed formula.
BigRational reference_number(Preset preset, const BigRational& p, const BigRational& q, long n);

}  // namespace rpq::deform
