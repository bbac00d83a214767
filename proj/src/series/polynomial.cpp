#include "rpq/series/polynomial.hpp"

#include <sstream>

namespace rpq::series {

Polynomial::Polynomial(const BigRational& constant) {
  if (constant != 0) terms_[0] = constant;
}

Polynomial Polynomial::from_coefficients(const std::vector<BigRational>& coefficients) {
  Polynomial p;
  for (std::size_t k = 0; k < coefficients.size(); ++k) p.set_coefficient(static_cast<long>(k), coefficients[k]);
  return p;
}

Polynomial Polynomial::monomial(long degree, const BigRational& c) {
  if (degree < 0) throw InvalidParameter("polynomial degree must be non-negative");
  Polynomial p;
  p.set_coefficient(degree, c);
  return p;
}

BigRational Polynomial::coefficient(long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void Polynomial::set_coefficient(long degree, const BigRational& c) {
  if (degree < 0) throw InvalidParameter("polynomial degree must be non-negative");
  if (c == 0) {
    terms_.erase(degree);
  } else {
    terms_[degree] = c;
  }
}

BigRational Polynomial::leading_coefficient() const {
  return terms_.empty() ? BigRational(0) : terms_.rbegin()->second;
}

std::vector<BigRational> Polynomial::dense() const {
  std::vector<BigRational> out(static_cast<std::size_t>(degree() + 1));
  for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k)] = c;
  return out;
}

Polynomial Polynomial::scaled_argument(const BigRational& c) const {
  Polynomial out;
  for (const auto& [k, a] : terms_) out.set_coefficient(k, a * ipow(c, k));
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  BigRational lead = leading_coefficient();
  Polynomial out;
  for (const auto& [k, a] : terms_) out.terms_[k] = a / lead;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [k, a] : terms_) out.terms_[k] = -a;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [k, c] : b.terms_) out.set_coefficient(k, out.coefficient(k) + c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<long, BigRational> acc;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) acc[i + j] += x * y;
  }
  Polynomial out;
  for (const auto& [k, c] : acc) out.set_coefficient(k, c);
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    BigRational mag = first ? c : abs(c);
    first = false;
    if (k == 0) {
      os << rpq::to_string(mag);
      continue;
    }
    if (mag == -1) {
      os << "-";
    } else if (mag != 1) {
      os << rpq::to_string(mag) << "*";
    }
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial quotient;
  Polynomial rest = a;
  const long db = b.degree();
  const BigRational lead = b.leading_coefficient();
  while (!rest.is_zero() && rest.degree() >= db) {
    long shift = rest.degree() - db;
    BigRational c = rest.leading_coefficient() / lead;
    Polynomial t = Polynomial::monomial(shift, c);
    quotient += t;
    rest -= t * b;
  }
  return {quotient, rest};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial pow(const Polynomial& a, long n) {
  if (n < 0) throw InvalidParameter("negative polynomial power");
  Polynomial out(1);
  for (long i = 0; i < n; ++i) out *= a;
  return out;
}

}  // namespace rpq::series
