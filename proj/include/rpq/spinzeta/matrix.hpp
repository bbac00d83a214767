#pragma once

#include <array>
#include <string>

#include "rpq/arith/padic.hpp"

namespace rpq::spinzeta {

/// 2x2 matrix over Q_p; all entries share one prime.
class Mat2Padic {
 public:
  Mat2Padic(PadicNumber a, PadicNumber b, PadicNumber c, PadicNumber d);
  static Mat2Padic identity(long prime, long precision);
  static Mat2Padic zero(long prime, long precision);
  /// Entries lifted from rationals at the given precision.
  static Mat2Padic from_rationals(const std::array<BigRational, 4>& entries, long prime, long precision);

  long prime() const { return a_.prime(); }
  /// Smallest relative precision cap among the entries.
  long precision() const;
  const PadicNumber& a() const { return a_; }
  const PadicNumber& b() const { return b_; }
  const PadicNumber& c() const { return c_; }
  const PadicNumber& d() const { return d_; }

  PadicNumber trace() const { return a_ + d_; }
  PadicNumber det() const { return a_ * d_ - b_ * c_; }
  /// Smallest entry valuation (kExact for the exact zero matrix).
  long valuation() const;
  /// Smallest entry absolute precision.
  long absolute_precision() const;
  /// Entrywise v(A - B), capped by precision.
  long agreement(const Mat2Padic& other) const;

  Mat2Padic scaled(const PadicNumber& s) const;
  friend Mat2Padic operator+(const Mat2Padic& x, const Mat2Padic& y);
  friend Mat2Padic operator-(const Mat2Padic& x, const Mat2Padic& y);
  friend Mat2Padic operator*(const Mat2Padic& x, const Mat2Padic& y);
  /// Entrywise equality to the joint precision.
  friend bool operator==(const Mat2Padic& x, const Mat2Padic& y);

  std::string to_string() const;

 private:
  PadicNumber a_, b_, c_, d_;
};

/// S_-, S_z, S_+ at scale hbar (hbar = p^i gives the congruence basis).
struct SpinBasis {
  Mat2Padic minus;
  Mat2Padic z;
  Mat2Padic plus;
};

SpinBasis spin_generators(const BigRational& scale, long prime, long precision);

/// x S_- + y S_z + z S_+.
Mat2Padic spin_combination(const SpinBasis& basis, const BigRational& x, const BigRational& y, const BigRational& z);

/// AB - BA.
Mat2Padic commutator(const Mat2Padic& x, const Mat2Padic& y);

/// exp(tS) through Cayley-Hamilton: tS = (T/2)I + Y with Y^2 = mu^2 I, so
/// exp(tS) = exp(T/2) (C(mu^2) I + D(mu^2) Y) with C, D the even and odd parts of exp.
/// Needs v(mu^2) > 2/(p-1) and, for nonzero trace, v(T/2) > 1/(p-1); throws
/// ConvergenceDomainError otherwise.  Y^2 = 0 gives I + Y exactly (times exp(T/2)).
Mat2Padic mat_exp(const Mat2Padic& s, const PadicNumber& t);

/// log g = sum (-1)^(n-1) (g - I)^n / n with the powers reduced by Cayley-Hamilton.
/// Needs det g = 1 to precision and v(Tr g - 2) > 2/(p-1).
Mat2Padic mat_log(const Mat2Padic& g);

/// Largest i <= precision with g = I mod p^i; 0 outside K_1.  Needs det g = 1 to precision.
long congruence_level(const Mat2Padic& g);

}  // namespace rpq::spinzeta
