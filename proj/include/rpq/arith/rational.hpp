#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rpq {

/// Arbitrary precision integer.
using BigInt = mpz_class;

/// Exact rational in canonical form (gcd-reduced, positive denominator).
using BigRational = mpq_class;

/// Parses "n" or "n/d" into a canonical rational.
/// Throws InvalidParameter on malformed text or a zero denominator.
BigRational parse_rational(std::string_view text);

/// "n/d", or "n" when the denominator is one.
std::string to_string(const BigRational& x);

/// Always "n/d", including "n/1"; used for table cells.
std::string to_fraction_string(const BigRational& x);

std::string to_string(const BigInt& x);

bool is_prime(long p);

/// Throws InvalidParameter unless p is prime.
void require_prime(long p);

/// Exponent of p in a nonzero integer.
long valuation(const BigInt& x, long p);

/// v_p(x); std::nullopt stands for +infinity (x = 0).
std::optional<long> padic_valuation(const BigRational& x, long p);

/// x^n for any integer n; throws DivisionByZero for 0^n with n < 0.
BigRational ipow(const BigRational& x, long n);

BigInt ipow(long base, unsigned long n);

/// n(n-1)/2 as a signed integer.
constexpr long choose2(long n) { return n * (n - 1) / 2; }

/// Largest e with p^e <= n, for n >= 1.
long floor_log(long n, long p);

/// v_p(n!) by Legendre's formula.
long factorial_valuation(long n, long p);

/// Sum of the base-p digits of n >= 0.
long digit_sum(long n, long p);

/// True when |x| <= |y| * 10^(-digits), i.e. a relative tolerance in exact arithmetic.
bool within_relative(const BigRational& error, const BigRational& reference, long digits);

}  // namespace rpq
