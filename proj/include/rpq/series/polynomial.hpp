#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpq/arith/scalar.hpp"

namespace rpq::series {

/// Univariate polynomial with exact rational coefficients; zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(BigRational(constant)) {}  // NOLINT
  /// c0 + c1 z + c2 z^2 + ...
  static Polynomial from_coefficients(const std::vector<BigRational>& coefficients);
  static Polynomial monomial(long degree, const BigRational& c = 1);
  /// The polynomial z (the identity).
  static Polynomial z() { return monomial(1); }

  const std::map<long, BigRational>& terms() const { return terms_; }
  BigRational coefficient(long degree) const;
  void set_coefficient(long degree, const BigRational& c);
  /// -1 for the zero polynomial.
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }
  BigRational leading_coefficient() const;
  /// Coefficients c0..c_degree.
  std::vector<BigRational> dense() const;

  template <Scalar S>
  S eval(const S& x) const {
    S acc = lift_like(x, BigRational(0));
    long d = degree();
    for (long k = d; k >= 0; --k) acc = acc * x + lift_like(x, coefficient(k));
    return acc;
  }
  BigRational operator()(const BigRational& x) const { return eval(x); }

  /// f(c z).
  Polynomial scaled_argument(const BigRational& c) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigRational& c, const Polynomial& a) { return Polynomial(c) * a; }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  std::map<long, BigRational> terms_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, long n);

}  // namespace rpq::series
