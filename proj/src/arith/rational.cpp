#include "rpq/arith/rational.hpp"

#include <cctype>

#include "rpq/arith/errors.hpp"

namespace rpq {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-') {
    throw InvalidParameter("not an exact rational: '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
  BigRational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) { return x.get_str(10); }

std::string to_fraction_string(const BigRational& x) {
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

bool is_prime(long p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(BigInt(p).get_mpz_t(), 40) > 0;
}

void require_prime(long p) {
  if (!is_prime(p)) throw InvalidParameter("not a prime: " + std::to_string(p));
}

long valuation(const BigInt& x, long p) {
  if (x == 0) throw InvalidParameter("valuation of zero integer is infinite");
  BigInt prime(p);
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

std::optional<long> padic_valuation(const BigRational& x, long p) {
  require_prime(p);
  if (x == 0) return std::nullopt;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

BigRational ipow(const BigRational& x, long n) {
  if (n < 0) {
    if (x == 0) throw DivisionByZero("zero raised to a negative power");
    BigRational inv = 1 / x;
    return ipow(inv, -n);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(num, den);
}

BigInt ipow(long base, unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), n);
  if (base < 0 && (n % 2 == 1)) r = -r;
  return r;
}

long floor_log(long n, long p) {
  long e = 0;
  long m = n;
  while (m >= p) {
    m /= p;
    ++e;
  }
  return e;
}

long factorial_valuation(long n, long p) {
  long v = 0;
  for (long m = n / p; m > 0; m /= p) v += m;
  return v;
}

long digit_sum(long n, long p) {
  long s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

bool within_relative(const BigRational& error, const BigRational& reference, long digits) {
  BigRational scaled = abs(error) * BigRational(ipow(10, static_cast<unsigned long>(digits)));
  return scaled <= abs(reference);
}

}  // namespace rpq
