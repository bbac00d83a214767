#include "rpq/arith/padic.hpp"

#include <algorithm>
#include <sstream>

#include "rpq/arith/errors.hpp"

namespace rpq {

namespace {

BigInt power_of(long p, long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  return r;
}

BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long saturate(long a) { return std::min(a, PadicNumber::kExact); }

void require_precision(long n) {
  if (n < 1) throw InvalidParameter("p-adic precision must be positive, got " + std::to_string(n));
}

}  // namespace

PadicNumber::PadicNumber(long prime, long precision) : prime_(prime), precision_(precision) {
  require_prime(prime);
  require_precision(precision);
}

PadicNumber PadicNumber::zero(long prime, long precision, long absolute) {
  PadicNumber z(prime, precision);
  z.absolute_ = saturate(absolute);
  return z;
}

PadicNumber PadicNumber::from_unit(long prime, long precision, long valuation, const BigInt& unit) {
  PadicNumber x(prime, precision);
  BigInt u = mod_positive(unit, power_of(prime, precision));
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(prime))) {
    throw InvalidParameter("p-adic unit part is divisible by p");
  }
  x.zero_ = false;
  x.valuation_ = valuation;
  x.unit_ = u;
  x.absolute_ = valuation + precision;
  return x;
}

PadicNumber PadicNumber::from_integer(const BigInt& n, long prime, long precision) {
  return from_rational(BigRational(n), prime, precision);
}

PadicNumber PadicNumber::from_rational(const BigRational& x, long prime, long precision) {
  require_prime(prime);
  require_precision(precision);
  if (x == 0) return zero(prime, precision);
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  BigInt p(prime);
  long a = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  long b = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  BigInt modulus = power_of(prime, precision);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  return from_unit(prime, precision, a - b, num * inv);
}

PadicNumber PadicNumber::from_digits(long prime, long valuation, const std::vector<long>& digits) {
  require_prime(prime);
  if (digits.empty()) throw InvalidParameter("p-adic digit list is empty");
  BigInt value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= prime) throw InvalidParameter("p-adic digit out of range");
    value = value * prime + *it;
  }
  long n = static_cast<long>(digits.size());
  if (value == 0) return zero(prime, n, valuation + n);
  long shift = rpq::valuation(value, prime);
  BigInt unit = value / power_of(prime, shift);
  if (n - shift < 1) return zero(prime, n, valuation + n);
  return from_unit(prime, n - shift, valuation + shift, unit);
}

std::vector<long> PadicNumber::digits() const {
  std::vector<long> out;
  if (zero_) return out;
  BigInt u = unit_;
  for (long i = 0; i < precision_; ++i) {
    BigInt r;
    mpz_fdiv_qr_ui(u.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(prime_));
    out.push_back(r.get_si());
  }
  return out;
}

BigRational PadicNumber::to_rational() const {
  if (zero_) return 0;
  return BigRational(unit_) * ipow(BigRational(prime_), valuation_);
}

BigRational PadicNumber::norm() const {
  if (zero_) return 0;
  return ipow(BigRational(prime_), -valuation_);
}

PadicNumber PadicNumber::lift(const BigRational& x) const { return from_rational(x, prime_, precision_); }

PadicNumber PadicNumber::lift(long n) const { return from_rational(BigRational(n), prime_, precision_); }

PadicNumber PadicNumber::with_precision(long n) const {
  require_precision(n);
  if (zero_) {
    PadicNumber z = *this;
    z.precision_ = n;
    return z;
  }
  if (n >= precision_) return *this;
  return from_unit(prime_, n, valuation_, unit_);
}

PadicNumber PadicNumber::truncated(long a) const {
  if (a >= absolute_precision()) return *this;
  if (zero_ || a <= valuation_) return zero(prime_, precision_, a);
  return from_unit(prime_, a - valuation_, valuation_, unit_);
}

void PadicNumber::require_same_prime(const PadicNumber& y) const {
  if (prime_ != y.prime_) {
    throw InvalidParameter("mixed primes " + std::to_string(prime_) + " and " + std::to_string(y.prime_));
  }
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  BigInt m = power_of(prime_, precision_);
  return from_unit(prime_, precision_, valuation_, m - unit_);
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  x.require_same_prime(y);
  const long p = x.prime_;
  const long cap = std::max(x.precision_, y.precision_);
  if (x.zero_ && y.zero_) return PadicNumber::zero(p, cap, std::min(x.absolute_, y.absolute_));
  if (x.zero_) return y.truncated(x.absolute_);
  if (y.zero_) return x.truncated(y.absolute_);
  const long vmin = std::min(x.valuation_, y.valuation_);
  const long abs = std::min(x.absolute_precision(), y.absolute_precision());
  if (abs <= vmin) return PadicNumber::zero(p, cap, abs);
  BigInt modulus = power_of(p, abs - vmin);
  BigInt s = x.unit_ * power_of(p, x.valuation_ - vmin) + y.unit_ * power_of(p, y.valuation_ - vmin);
  s = mod_positive(s, modulus);
  if (s == 0) return PadicNumber::zero(p, cap, abs);
  long k = valuation(s, p);
  long v = vmin + k;
  long rel = std::min(abs - v, cap);
  return PadicNumber::from_unit(p, rel, v, s / power_of(p, k));
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  x.require_same_prime(y);
  const long p = x.prime_;
  const long n = std::min(x.precision_, y.precision_);
  if (x.zero_ || y.zero_) {
    long abs = x.is_exact_zero() || y.is_exact_zero() ? PadicNumber::kExact : saturate(x.valuation() + y.valuation());
    return PadicNumber::zero(p, std::max(x.precision_, y.precision_), abs);
  }
  return PadicNumber::from_unit(p, n, x.valuation_ + y.valuation_, x.unit_ * y.unit_);
}

PadicNumber PadicNumber::inverse() const {
  if (zero_) throw DivisionByZero("inverse of a p-adic zero");
  BigInt m = power_of(prime_, precision_);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
  return from_unit(prime_, precision_, -valuation_, inv);
}

PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) {
  x.require_same_prime(y);
  if (y.zero_) throw DivisionByZero("division by a p-adic zero");
  if (x.zero_) {
    long abs = x.is_exact_zero() ? PadicNumber::kExact : x.absolute_ - y.valuation_;
    return PadicNumber::zero(x.prime_, x.precision_, abs);
  }
  return x * y.inverse();
}

PadicNumber PadicNumber::pow(long n) const {
  if (n == 0) return lift(1);
  if (zero_) {
    if (n < 0) throw DivisionByZero("p-adic zero raised to a negative power");
    return zero(prime_, precision_, saturate(absolute_ * n));
  }
  PadicNumber base = n < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  BigInt m = power_of(prime_, precision_);
  BigInt u;
  mpz_powm_ui(u.get_mpz_t(), base.unit_.get_mpz_t(), e, m.get_mpz_t());
  return from_unit(prime_, precision_, base.valuation_ * static_cast<long>(e), u);
}

bool operator==(const PadicNumber& x, const PadicNumber& y) { return (x - y).is_zero(); }

long PadicNumber::agreement(const PadicNumber& y) const {
  PadicNumber d = *this - y;
  return d.valuation();
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (zero_) {
    if (absolute_ == kExact) return "0";
    os << "O(" << prime_ << "^" << absolute_ << ")";
    return os.str();
  }
  os << prime_ << "^" << valuation_ << " * (";
  auto ds = digits();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) os << " + ";
    os << ds[i];
    if (i == 1) os << "*" << prime_;
    if (i > 1) os << "*" << prime_ << "^" << i;
  }
  os << ") [" << precision_ << " digits]";
  return os.str();
}

long padic_valuation(const PadicNumber& x) { return x.valuation(); }

BigRational padic_norm(const PadicNumber& x) { return x.norm(); }

PadicNumber padic_add(const PadicNumber& x, const PadicNumber& y) { return x + y; }

PadicNumber padic_mul(const PadicNumber& x, const PadicNumber& y) { return x * y; }

PadicNumber padic_pow_int(const PadicNumber& x, long n) { return x.pow(n); }

PadicNumber padic_exp(const PadicNumber& x) {
  const long p = x.prime();
  const long need = p == 2 ? 2 : 1;
  if (x.valuation() < need) {
    throw ConvergenceDomainError("exp needs |x|_p < p^(-1/(p-1)), i.e. v(x) >= " + std::to_string(need) +
                                 ", got v(x) = " + std::to_string(x.valuation()));
  }
  if (x.is_exact_zero()) return x.lift(1);
  if (x.is_zero()) return PadicNumber::from_integer(1, p, std::min(x.absolute_precision(), x.precision()));
  const long target = x.absolute_precision();
  PadicNumber one = PadicNumber::from_integer(1, p, target);
  PadicNumber sum = one;
  PadicNumber term = one;
  const long v = x.valuation();
  for (long n = 1;; ++n) {
    if (n * v - (n - 1) / (p - 1) >= target) break;
    term = term * x / PadicNumber::from_integer(n, p, target);
    sum += term;
  }
  return sum;
}

PadicNumber padic_log(const PadicNumber& u) {
  const long p = u.prime();
  PadicNumber y = u - u.lift(1);
  if (y.valuation() < 1) {
    throw ConvergenceDomainError("log needs |u - 1|_p < 1, got v(u - 1) = " + std::to_string(y.valuation()));
  }
  if (y.is_zero()) return y;
  const long target = u.absolute_precision();
  const long v = y.valuation();
  PadicNumber sum = PadicNumber::zero(p, u.precision());
  PadicNumber power = y;
  for (long n = 1;; ++n) {
    if (n * v - floor_log(n, p) >= target) break;
    if (n > 1) power = power * y;
    PadicNumber term = power / PadicNumber::from_integer(n, p, target);
    if (n % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

PadicNumber padic_power(const PadicNumber& q, const PadicNumber& x) {
  const long p = q.prime();
  PadicNumber d = q - q.lift(1);
  const long need = p == 2 ? 2 : 1;
  if (d.valuation() < need) {
    throw ConvergenceDomainError("q^x needs |q - 1|_p < p^(-1/(p-1)), i.e. v(q - 1) >= " + std::to_string(need) +
                                 ", got " + std::to_string(d.valuation()));
  }
  return padic_exp(x * padic_log(q));
}

}  // namespace rpq
