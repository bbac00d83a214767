#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "rpq/arith/scalar.hpp"

namespace rpq::deform {

enum class Preset {
  heine,
  quesne,
  biedenharn_macfarlane,
  jagannathan_srinivasa,
  chakrabarty_jagannathan,
  hounkonnou_ngompe,
  custom,
};

/// Canonical name, e.g. "jagannathan_srinivasa".
std::string preset_name(Preset preset);
/// Accepts the canonical names and the short forms js, bm, cj, hn.
Preset parse_preset(std::string_view name);
/// The six built-in presets in declaration order.
const std::vector<Preset>& all_presets();

/// Finite Laurent polynomial in two variables with rational coefficients.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  /// Terms (s, t, c) meaning c u^s v^t; repeated exponents accumulate.
  explicit LaurentPoly2(const std::vector<std::tuple<long, long, BigRational>>& terms);

  void add_term(long s, long t, const BigRational& c);
  const std::map<std::pair<long, long>, BigRational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Sum of the coefficients, i.e. the value at (1, 1).
  BigRational value_at_one() const;

  template <Scalar S>
  S eval(const S& u, const S& v) const {
    S sum = lift_like(u, BigRational(0));
    for (const auto& [exps, c] : terms_) {
      sum = sum + lift_like(u, c) * power(u, exps.first) * power(v, exps.second);
    }
    return sum;
  }

 private:
  std::map<std::pair<long, long>, BigRational> terms_;
};

/// For presets, R(p^n, q^n) = scale * (alpha^n - beta^n) / (alpha - beta): the deformed
/// derivative is scale times the two-point difference operator with shifts alpha, beta.
template <Scalar S>
struct ShiftPair {
  S alpha;
  S beta;
  S scale;
};

/// Sum_{k<n} alpha^(n-1-k) beta^k, i.e. (alpha^n - beta^n)/(alpha - beta) without dividing.
/// Uses S(2m) = S(m)(alpha^m + beta^m) and S(m+1) = alpha S(m) + beta^m.
template <Scalar S>
S geometric_sum(const S& alpha, const S& beta, long n) {
  S s = lift_like(alpha, BigRational(0));
  S a = lift_like(alpha, BigRational(1));
  S b = a;
  if (n <= 0) return s;
  int top = 63;
  while (((n >> top) & 1) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    s = s * (a + b);
    a = a * a;
    b = b * b;
    if ((n >> bit) & 1) {
      s = alpha * s + b;
      a = a * alpha;
      b = b * beta;
    }
  }
  return s;
}

/// The kernel R(u, v): a preset tag bound later to (p, q), or a custom ratio of Laurent
/// polynomials N(u, v)/D(u, v) with N(1,1) = 0 and D(1,1) != 0.
class StructureFunction {
 public:
  StructureFunction() : StructureFunction(Preset::jagannathan_srinivasa) {}
  explicit StructureFunction(Preset preset);
  static StructureFunction custom(LaurentPoly2 numerator, LaurentPoly2 denominator);

  Preset kind() const { return kind_; }
  std::string name() const { return preset_name(kind_); }
  bool is_custom() const { return kind_ == Preset::custom; }
  /// True when [1] = 1 for every binding, so [jk] = [j]_{p^k,q^k} [k] holds.
  bool normalized() const;
  /// Presets whose value ignores p.
  bool ignores_p() const;
  const LaurentPoly2& numerator() const { return num_; }
  const LaurentPoly2& denominator() const { return den_; }

  template <Scalar S>
  std::optional<ShiftPair<S>> shift_pair(const S& p, const S& q) const {
    const S one = lift_like(p, BigRational(1));
    switch (kind_) {
      case Preset::heine:
        return ShiftPair<S>{one, q, one};
      case Preset::quesne:
        return ShiftPair<S>{one, one / q, one / q};
      case Preset::biedenharn_macfarlane:
        return ShiftPair<S>{one / q, q, one};
      case Preset::jagannathan_srinivasa:
        return ShiftPair<S>{p, q, one};
      case Preset::chakrabarty_jagannathan:
        return ShiftPair<S>{one / p, q, one};
      case Preset::hounkonnou_ngompe:
        return ShiftPair<S>{p, one / q, p / q};
      case Preset::custom:
        break;
    }
    return std::nullopt;
  }

  /// R(u, v) for the binding (p, q), as the quotient form.  Throws SingularityError when the
  /// quotient's denominator vanishes (including the classical limit p = q = 1).
  template <Scalar S>
  S eval(const S& u, const S& v, const S& p, const S& q) const {
    const S one = lift_like(p, BigRational(1));
    S n = one;
    S d = one;
    switch (kind_) {
      case Preset::heine:
        n = one - v, d = one - q;
        break;
      case Preset::quesne:
        n = one - one / v, d = q - one;
        break;
      case Preset::biedenharn_macfarlane:
        n = v - one / v, d = q - one / q;
        break;
      case Preset::jagannathan_srinivasa:
        n = u - v, d = p - q;
        break;
      case Preset::chakrabarty_jagannathan:
        n = one / u - v, d = one / p - q;
        break;
      case Preset::hounkonnou_ngompe:
        n = u - one / v, d = q - one / p;
        break;
      case Preset::custom:
        n = num_.eval(u, v), d = den_.eval(u, v);
        break;
    }
    if (is_zero_scalar(d)) throw SingularityError(name() + ": structure function denominator vanishes");
    return n / d;
  }

  /// [n] = R(p^n, q^n) for any integer n.  Presets use the division-free geometric sum, so
  /// the classical limit p = q = 1 gives [n] = n.
  template <Scalar S>
  S number(long n, const S& p, const S& q) const {
    if (auto sp = shift_pair(p, q)) {
      if (n >= 0) return sp->scale * geometric_sum(sp->alpha, sp->beta, n);
      S ab = power(S(sp->alpha * sp->beta), n);
      return lift_like(p, BigRational(-1)) * sp->scale * geometric_sum(sp->alpha, sp->beta, -n) * ab;
    }
    S d = den_.eval(power(p, n), power(q, n));
    if (is_zero_scalar(d)) {
      throw SingularityError("custom structure function has a pole at n = " + std::to_string(n));
    }
    return num_.eval(power(p, n), power(q, n)) / d;
  }

 private:
  Preset kind_;
  LaurentPoly2 num_;
  LaurentPoly2 den_;
};

}  // namespace rpq::deform
