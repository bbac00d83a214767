#include "rpq/series/formal_series.hpp"

#include <algorithm>

#include "rpq/arith/errors.hpp"

namespace rpq::series {

namespace {

using Coeffs = std::vector<BigRational>;

Coeffs plain_divide(const Coeffs& a, const Coeffs& b) {
  std::size_t k = 0;
  while (k < b.size() && b[k] == 0) ++k;
  if (k == b.size()) throw DivisionByZero("series division by the zero series");
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= a.size() || a[i] != 0) throw PoleAtOrigin("series quotient has a pole at the origin");
  }
  if (k >= a.size()) throw PoleAtOrigin("series quotient has no coefficients left after cancelling z^k");
  const std::size_t m = std::min(a.size(), b.size()) - k;
  Coeffs h(m);
  const BigRational& b0 = b[k];
  for (std::size_t n = 0; n < m; ++n) {
    BigRational acc = a[n + k];
    for (std::size_t j = 1; j <= n; ++j) acc -= b[j + k] * h[n - j];
    h[n] = acc / b0;
  }
  return h;
}

}  // namespace

std::string normalization_name(Normalization n) { return n == Normalization::plain ? "plain" : "factorial"; }

FormalSeries::FormalSeries(std::vector<BigRational> coefficients, Normalization mode,
                           std::vector<BigRational> factorials, long leading_exponent)
    : coefficients_(std::move(coefficients)),
      mode_(mode),
      factorials_(std::move(factorials)),
      leading_exponent_(leading_exponent) {
  if (coefficients_.empty()) throw InvalidParameter("a formal series needs at least one coefficient");
  if (mode_ == Normalization::factorial) {
    if (factorials_.size() < coefficients_.size()) {
      throw InvalidParameter("factorial-normalized series needs [0]!..[M]!");
    }
    factorials_.resize(coefficients_.size());
  } else {
    factorials_.clear();
  }
}

FormalSeries FormalSeries::from_polynomial(const Polynomial& p, long order) {
  if (order < 0) throw InvalidParameter("series order must be non-negative");
  std::vector<BigRational> c(static_cast<std::size_t>(order + 1));
  for (const auto& [k, a] : p.terms()) {
    if (k <= order) c[static_cast<std::size_t>(k)] = a;
  }
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::constant(const BigRational& c, long order) {
  return from_polynomial(Polynomial(c), order);
}

FormalSeries FormalSeries::to_plain() const {
  if (mode_ == Normalization::plain) return *this;
  std::vector<BigRational> c(coefficients_.size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = coefficients_[n] / factorials_[n];
  return FormalSeries(std::move(c), Normalization::plain, {}, leading_exponent_);
}

FormalSeries FormalSeries::to_factorial(const std::vector<BigRational>& factorials) const {
  FormalSeries plain = to_plain();
  if (factorials.size() < plain.coefficients_.size()) {
    throw InvalidParameter("factorial table shorter than the series");
  }
  std::vector<BigRational> c(plain.coefficients_.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (factorials[n] == 0) throw SingularityError("deformed factorial [" + std::to_string(n) + "]! vanishes");
    c[n] = plain.coefficients_[n] * factorials[n];
  }
  return FormalSeries(std::move(c), Normalization::factorial, factorials, leading_exponent_);
}

FormalSeries FormalSeries::truncated(long order) const {
  if (order < 0 || order > this->order()) throw InvalidParameter("cannot truncate to a higher order");
  std::vector<BigRational> c(coefficients_.begin(), coefficients_.begin() + order + 1);
  return FormalSeries(std::move(c), mode_, factorials_, leading_exponent_);
}

FormalSeries FormalSeries::scaled_argument(const BigRational& lambda) const {
  std::vector<BigRational> c(coefficients_.size());
  BigRational power = 1;
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = coefficients_[n] * power;
    power *= lambda;
  }
  if (leading_exponent_ != 0) {
    BigRational scale = ipow(lambda, leading_exponent_);
    for (auto& x : c) x *= scale;
  }
  return FormalSeries(std::move(c), mode_, factorials_, leading_exponent_);
}

FormalSeries FormalSeries::even_part() const {
  FormalSeries out = *this;
  for (std::size_t n = 0; n < out.coefficients_.size(); ++n) {
    if ((static_cast<long>(n) + leading_exponent_) % 2 != 0) out.coefficients_[n] = 0;
  }
  return out;
}

FormalSeries FormalSeries::odd_part() const {
  FormalSeries out = *this;
  for (std::size_t n = 0; n < out.coefficients_.size(); ++n) {
    if ((static_cast<long>(n) + leading_exponent_) % 2 == 0) out.coefficients_[n] = 0;
  }
  return out;
}

FormalSeries FormalSeries::shifted_up() const {
  if (mode_ != Normalization::plain || laurent()) throw InvalidParameter("shift needs a plain power series");
  std::vector<BigRational> c;
  c.reserve(coefficients_.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), coefficients_.begin(), coefficients_.end());
  return FormalSeries(std::move(c));
}

Polynomial FormalSeries::to_polynomial() const {
  if (laurent()) throw InvalidParameter("a Laurent series is not a polynomial");
  return Polynomial::from_coefficients(to_plain().coefficients_);
}

void FormalSeries::require_compatible(const FormalSeries& b) const {
  if (laurent() || b.laurent()) throw InvalidParameter("Laurent-mode series support no arithmetic");
  if (mode_ != b.mode_) throw InvalidParameter("series arithmetic needs equal normalization modes");
  if (mode_ == Normalization::factorial) {
    std::size_t m = std::min(coefficients_.size(), b.coefficients_.size());
    for (std::size_t n = 0; n < m; ++n) {
      if (factorials_[n] != b.factorials_[n]) throw InvalidParameter("series normalized with different factorials");
    }
  }
}

FormalSeries FormalSeries::rewrap(const FormalSeries& plain_result) const {
  if (mode_ == Normalization::plain) return plain_result;
  return plain_result.to_factorial(factorials_);
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  a.require_compatible(b);
  std::size_t m = std::min(a.coefficients_.size(), b.coefficients_.size());
  std::vector<BigRational> c(m);
  for (std::size_t n = 0; n < m; ++n) c[n] = a.coefficients_[n] + b.coefficients_[n];
  return FormalSeries(std::move(c), a.mode_, a.factorials_);
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a + (-b); }

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  a.require_compatible(b);
  const auto x = a.to_plain().coefficients_;
  const auto y = b.to_plain().coefficients_;
  std::size_t m = std::min(x.size(), y.size());
  std::vector<BigRational> c(m);
  for (std::size_t n = 0; n < m; ++n) {
    BigRational acc = 0;
    for (std::size_t j = 0; j <= n; ++j) acc += x[j] * y[n - j];
    c[n] = acc;
  }
  return a.rewrap(FormalSeries(std::move(c)));
}

FormalSeries operator*(const BigRational& c, const FormalSeries& a) {
  FormalSeries out = a;
  for (auto& x : out.coefficients_) x *= c;
  return out;
}

FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) {
  a.require_compatible(b);
  return a.rewrap(FormalSeries(plain_divide(a.to_plain().coefficients_, b.to_plain().coefficients_)));
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
  return a.mode_ == b.mode_ && a.leading_exponent_ == b.leading_exponent_ && a.coefficients_ == b.coefficients_;
}

FormalSeries divide_laurent(const FormalSeries& a, const FormalSeries& b) {
  if (a.normalization() != Normalization::plain || b.normalization() != Normalization::plain) {
    throw InvalidParameter("Laurent division works on plain series");
  }
  const auto& y = b.coefficients();
  std::size_t k = 0;
  while (k < y.size() && y[k] == 0) ++k;
  if (k == y.size()) throw DivisionByZero("series division by the zero series");
  std::vector<BigRational> shifted(y.begin() + static_cast<long>(k), y.end());
  auto h = plain_divide(a.coefficients(), shifted);
  return FormalSeries(std::move(h), Normalization::plain, {}, -static_cast<long>(k));
}

}  // namespace rpq::series
