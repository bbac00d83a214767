#pragma once

#include <string>
#include <vector>

#include "rpq/arith/rational.hpp"

namespace rpq {

/// Element of Q_p stored in the capped-relative model: x = p^v * u with u a unit known
/// modulo p^N.  N is the relative precision (number of known unit digits); the absolute
/// precision is v + N.
///
/// A zero element carries the absolute precision it is known to: "O(p^k)".  Zeros built
/// from exact input are exact and absorb nothing in sums.
///
/// Results of arithmetic report the precision they actually guarantee: a sum is known to
/// the smaller absolute precision of its operands, so cancellation shrinks the relative
/// precision; a product keeps the smaller relative precision.
class PadicNumber {
 public:
  static constexpr long kDefaultPrecision = 32;
  /// Absolute precision of an exact zero; also the valuation reported for it.
  static constexpr long kExact = 1L << 40;

  /// Exact zero for p = 2 with the default cap; only meaningful as a placeholder.
  PadicNumber() : PadicNumber(2, kDefaultPrecision) {}

  /// Exact zero with the given prime and relative-precision cap.
  PadicNumber(long prime, long precision);

  /// Zero known modulo p^absolute.
  static PadicNumber zero(long prime, long precision, long absolute = kExact);
  static PadicNumber from_integer(const BigInt& n, long prime, long precision = kDefaultPrecision);
  static PadicNumber from_rational(const BigRational& x, long prime, long precision = kDefaultPrecision);
  /// p^valuation * (d0 + d1 p + ...); the precision is the number of digits supplied.
  /// Leading zero digits are absorbed into the valuation.
  static PadicNumber from_digits(long prime, long valuation, const std::vector<long>& digits);
  /// p^valuation * unit with unit reduced mod p^precision; unit must be prime to p.
  static PadicNumber from_unit(long prime, long precision, long valuation, const BigInt& unit);

  long prime() const { return prime_; }
  /// Relative precision N (the cap, for a zero).
  long precision() const { return precision_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && absolute_ == kExact; }
  /// Valuation; for a zero, the lower bound known for it (kExact if exact).
  long valuation() const { return zero_ ? absolute_ : valuation_; }
  long absolute_precision() const { return zero_ ? absolute_ : valuation_ + precision_; }
  /// Unit part, 0 <= u < p^N; zero for the zero element.
  const BigInt& unit() const { return unit_; }
  /// N base-p digits of the unit, least significant first; empty for zero.
  std::vector<long> digits() const;
  bool is_unit() const { return !zero_ && valuation_ == 0; }

  /// The rational p^v * u (the stored representative).
  BigRational to_rational() const;
  /// |x|_p = p^(-v); 0 for zero.
  BigRational norm() const;

  /// Same prime and precision as *this.
  PadicNumber lift(const BigRational& x) const;
  PadicNumber lift(long n) const;
  /// Relative precision lowered to at most n.
  PadicNumber with_precision(long n) const;
  /// Absolute precision lowered to at most a.
  PadicNumber truncated(long a) const;

  PadicNumber operator-() const;
  PadicNumber inverse() const;
  PadicNumber pow(long n) const;

  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y);
  PadicNumber& operator+=(const PadicNumber& y) { return *this = *this + y; }
  PadicNumber& operator-=(const PadicNumber& y) { return *this = *this - y; }
  PadicNumber& operator*=(const PadicNumber& y) { return *this = *this * y; }
  PadicNumber& operator/=(const PadicNumber& y) { return *this = *this / y; }

  /// Equality to the joint precision: x - y is a (possibly inexact) zero.
  friend bool operator==(const PadicNumber& x, const PadicNumber& y);

  /// v(x - y), capped by the joint absolute precision.
  long agreement(const PadicNumber& y) const;
  /// v(x - y) >= digits (absolute).
  bool agrees_with(const PadicNumber& y, long digits) const { return agreement(y) >= digits; }

  /// Canonical text form: p^v * (d0 + d1*p + ...) [N digits]; "0" or "O(p^k)" for zeros.
  std::string to_string() const;

 private:
  void require_same_prime(const PadicNumber& y) const;

  long prime_ = 2;
  long precision_ = kDefaultPrecision;
  long valuation_ = 0;
  long absolute_ = kExact;
  bool zero_ = true;
  BigInt unit_ = 0;
};

/// p-adic valuation of a p-adic number (lower bound for zeros).
long padic_valuation(const PadicNumber& x);
/// p^(-v) as an exact rational; 0 for zero.
BigRational padic_norm(const PadicNumber& x);

PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y);
PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y);
PadicNumber padic_pow_int(const PadicNumber& x, long n);

/// Sum of x^n/n!.  Requires v(x) >= 1 (v(x) >= 2 when p = 2).  The term x^n/n! has
/// valuation n v(x) - v(n!) >= n v(x) - (n-1)/(p-1); summation stops once that bound reaches
/// the absolute precision of x, which is also the precision of the result.
PadicNumber padic_exp(const PadicNumber& x);

/// Sum of (-1)^(n-1) (u-1)^n / n.  Requires v(u - 1) >= 1.  Terms have valuation
/// n v(u-1) - v(n) >= n v(u-1) - floor(log_p n); the result has the absolute precision of u.
PadicNumber padic_log(const PadicNumber& u);

/// q^x = exp(x log q).  Requires v(q - 1) > 1/(p-1).
PadicNumber padic_power(const PadicNumber& q, const PadicNumber& x);

}  // namespace rpq
