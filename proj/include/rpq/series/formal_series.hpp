#pragma once

#include <string>
#include <vector>

#include "rpq/arith/rational.hpp"
#include "rpq/series/polynomial.hpp"

namespace rpq::series {

enum class Normalization { plain, factorial };

std::string normalization_name(Normalization n);

/// Truncated power series c_0 + c_1 z + ... + c_M z^M + O(z^(M+1)).
///
/// In factorial mode coefficient n stands for c_n / [n]!, and the series carries the
/// factorial table [0]!..[M]! it was normalized with.  Arithmetic converts to plain form,
/// operates, and converts back; operands must share the mode and the table.
///
/// A series in Laurent mode has leading_exponent -1: coefficient i multiplies z^(i-1).
/// Only csc and coth produce such series and they support no further arithmetic.
class FormalSeries {
 public:
  FormalSeries() : coefficients_(1, BigRational(0)) {}
  explicit FormalSeries(std::vector<BigRational> coefficients, Normalization mode = Normalization::plain,
                        std::vector<BigRational> factorials = {}, long leading_exponent = 0);
  static FormalSeries from_polynomial(const Polynomial& p, long order);
  static FormalSeries constant(const BigRational& c, long order);

  long order() const { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coefficients_; }
  const BigRational& operator[](long i) const { return coefficients_.at(static_cast<std::size_t>(i)); }
  Normalization normalization() const { return mode_; }
  const std::vector<BigRational>& factorials() const { return factorials_; }
  long leading_exponent() const { return leading_exponent_; }
  bool laurent() const { return leading_exponent_ != 0; }

  FormalSeries to_plain() const;
  /// Factorial-normalized view using [0]!..[M]!; throws SingularityError on a zero factorial.
  FormalSeries to_factorial(const std::vector<BigRational>& factorials) const;
  FormalSeries truncated(long order) const;
  /// f(lambda z).
  FormalSeries scaled_argument(const BigRational& lambda) const;
  FormalSeries even_part() const;
  FormalSeries odd_part() const;
  /// Multiplication by z (order grows by one).
  FormalSeries shifted_up() const;
  Polynomial to_polynomial() const;

  FormalSeries operator-() const;
  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const BigRational& c, const FormalSeries& a);
  /// Truncated division.  Common leading zeros are cancelled first; a remaining zero
  /// constant term in the divisor throws PoleAtOrigin.
  friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b);

 private:
  void require_compatible(const FormalSeries& b) const;
  FormalSeries rewrap(const FormalSeries& plain_result) const;

  std::vector<BigRational> coefficients_;
  Normalization mode_ = Normalization::plain;
  std::vector<BigRational> factorials_;
  long leading_exponent_ = 0;
};

/// Plain division allowing a pole at the origin: b has valuation k >= 1 beyond a's, and the
/// result is returned in Laurent mode with leading exponent -k (only k = 1 is used).
FormalSeries divide_laurent(const FormalSeries& a, const FormalSeries& b);

}  // namespace rpq::series
