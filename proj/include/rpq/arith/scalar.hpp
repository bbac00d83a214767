#pragma once

#include <concepts>
#include <string>

#include "rpq/arith/errors.hpp"
#include "rpq/arith/padic.hpp"
#include "rpq/arith/rational.hpp"

namespace rpq {

/// Per-type hooks that let deformation code run over rationals, p-adic numbers and
/// high-precision reals alike.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<BigRational> {
  static BigRational lift(const BigRational&, const BigRational& r) { return r; }
  static bool is_zero(const BigRational& x) { return sgn(x) == 0; }
  static std::string text(const BigRational& x) { return to_string(x); }
};

template <>
struct ScalarTraits<PadicNumber> {
  static PadicNumber lift(const PadicNumber& like, const BigRational& r) { return like.lift(r); }
  static bool is_zero(const PadicNumber& x) { return x.is_zero(); }
  static std::string text(const PadicNumber& x) { return x.to_string(); }
};

template <class S>
concept Scalar = requires(const S& a, const S& b, const BigRational& r) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { ScalarTraits<S>::lift(a, r) } -> std::convertible_to<S>;
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
};

/// The rational r in the scalar domain of `like` (same prime and precision for p-adics).
template <Scalar S>
S lift_like(const S& like, const BigRational& r) {
  return ScalarTraits<S>::lift(like, r);
}

template <Scalar S>
bool is_zero_scalar(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

/// x^n by repeated squaring; negative n inverts first.
template <Scalar S>
S power(const S& x, long n) {
  S result = lift_like(x, BigRational(1));
  if (n == 0) return result;
  S base = x;
  if (n < 0) {
    if (is_zero_scalar(x)) throw DivisionByZero("zero raised to a negative power");
    base = lift_like(x, BigRational(1)) / x;
    n = -n;
  }
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace rpq
