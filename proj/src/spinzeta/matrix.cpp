#include "rpq/spinzeta/matrix.hpp"

#include <algorithm>

#include "rpq/arith/errors.hpp"

namespace rpq::spinzeta {

namespace {

long floor_log(long n, long p) {
  long k = 0;
  for (long m = n; m >= p; m /= p) ++k;
  return k;
}

// v(x) * (p - 1) > bound, with zeros always passing.
bool valuation_exceeds(const PadicNumber& x, long numerator) {
  if (x.is_zero()) return true;
  return x.valuation() * (x.prime() - 1) > numerator;
}

}  // namespace

Mat2Padic::Mat2Padic(PadicNumber a, PadicNumber b, PadicNumber c, PadicNumber d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const long p = a_.prime();
  if (b_.prime() != p || c_.prime() != p || d_.prime() != p) {
    throw InvalidParameter("matrix entries must share one prime");
  }
}

Mat2Padic Mat2Padic::identity(long prime, long precision) {
  return from_rationals({1, 0, 0, 1}, prime, precision);
}

Mat2Padic Mat2Padic::zero(long prime, long precision) { return from_rationals({0, 0, 0, 0}, prime, precision); }

Mat2Padic Mat2Padic::from_rationals(const std::array<BigRational, 4>& e, long prime, long precision) {
  auto lift = [&](const BigRational& x) { return PadicNumber::from_rational(x, prime, precision); };
  return Mat2Padic(lift(e[0]), lift(e[1]), lift(e[2]), lift(e[3]));
}

long Mat2Padic::precision() const {
  return std::min({a_.precision(), b_.precision(), c_.precision(), d_.precision()});
}

long Mat2Padic::valuation() const {
  return std::min({a_.valuation(), b_.valuation(), c_.valuation(), d_.valuation()});
}

long Mat2Padic::absolute_precision() const {
  return std::min({a_.absolute_precision(), b_.absolute_precision(), c_.absolute_precision(), d_.absolute_precision()});
}

long Mat2Padic::agreement(const Mat2Padic& o) const {
  return std::min({a_.agreement(o.a_), b_.agreement(o.b_), c_.agreement(o.c_), d_.agreement(o.d_)});
}

Mat2Padic Mat2Padic::scaled(const PadicNumber& s) const { return Mat2Padic(s * a_, s * b_, s * c_, s * d_); }

Mat2Padic operator+(const Mat2Padic& x, const Mat2Padic& y) {
  return Mat2Padic(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
}

Mat2Padic operator-(const Mat2Padic& x, const Mat2Padic& y) {
  return Mat2Padic(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
}

Mat2Padic operator*(const Mat2Padic& x, const Mat2Padic& y) {
  return Mat2Padic(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                   x.c_ * y.b_ + x.d_ * y.d_);
}

bool operator==(const Mat2Padic& x, const Mat2Padic& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string Mat2Padic::to_string() const {
  return "[[" + a_.to_string() + ", " + b_.to_string() + "], [" + c_.to_string() + ", " + d_.to_string() + "]]";
}

SpinBasis spin_generators(const BigRational& scale, long prime, long precision) {
  if (scale == 0) throw InvalidParameter("the generator scale must be nonzero");
  const BigRational half = scale / 2;
  return SpinBasis{Mat2Padic::from_rationals({0, 0, scale, 0}, prime, precision),
                   Mat2Padic::from_rationals({half, 0, 0, BigRational(-half)}, prime, precision),
                   Mat2Padic::from_rationals({0, scale, 0, 0}, prime, precision)};
}

Mat2Padic spin_combination(const SpinBasis& basis, const BigRational& x, const BigRational& y, const BigRational& z) {
  const long p = basis.z.prime();
  const long n = basis.z.precision();
  auto lift = [&](const BigRational& v) { return PadicNumber::from_rational(v, p, n); };
  return basis.minus.scaled(lift(x)) + basis.z.scaled(lift(y)) + basis.plus.scaled(lift(z));
}

Mat2Padic commutator(const Mat2Padic& x, const Mat2Padic& y) {
  if (x.prime() != y.prime()) throw InvalidParameter("commutator of matrices over different primes");
  return x * y - y * x;
}

Mat2Padic mat_exp(const Mat2Padic& s, const PadicNumber& t) {
  const long p = s.prime();
  if (t.prime() != p) throw InvalidParameter("mat_exp: mixed primes");
  const long n = s.precision();
  Mat2Padic x = s.scaled(t);
  const PadicNumber half = PadicNumber::from_rational(BigRational(1, 2), p, n);
  const PadicNumber shift = x.trace() * half;
  const Mat2Padic id = Mat2Padic::identity(p, n);
  const Mat2Padic y = x - id.scaled(shift);
  const PadicNumber m = shift * shift - x.det();
  if (!valuation_exceeds(m, 2)) {
    throw ConvergenceDomainError("exp(tS) needs |mu^2|_p < p^(-2/(p-1)) for the eigenvalues +-mu of tS - (T/2)I, got v(mu^2) = " +
                                 std::to_string(m.valuation()));
  }
  if (!valuation_exceeds(shift, 1)) {
    throw ConvergenceDomainError("exp(tS) needs |Tr(tS)/2|_p < p^(-1/(p-1)), got v = " +
                                 std::to_string(shift.valuation()));
  }
  PadicNumber even = PadicNumber::from_integer(1, p, n);
  PadicNumber odd = even;
  if (!m.is_zero()) {
    const long vm = m.valuation();
    PadicNumber ce = even;
    PadicNumber co = odd;
    for (long k = 1;; ++k) {
      // v(m^k/(2k)!) >= k v(m) - (2k - 1)/(p - 1); stop once the odd-part bound passes the cap.
      if (k * vm * (p - 1) - 2 * k >= (n + std::max(0L, -y.valuation())) * (p - 1)) break;
      ce = ce * m / PadicNumber::from_integer((2 * k - 1) * (2 * k), p, n);
      co = co * m / PadicNumber::from_integer((2 * k) * (2 * k + 1), p, n);
      even += ce;
      odd += co;
    }
  }
  Mat2Padic core = id.scaled(even) + y.scaled(odd);
  if (shift.is_exact_zero()) return core;
  return core.scaled(padic_exp(shift.with_precision(n)));
}

Mat2Padic mat_log(const Mat2Padic& g) {
  const long p = g.prime();
  const long n = g.precision();
  const PadicNumber one = PadicNumber::from_integer(1, p, n);
  if (!(g.det() == one)) throw ConvergenceDomainError("log g needs det g = 1, got " + g.det().to_string());
  const Mat2Padic id = Mat2Padic::identity(p, n);
  const Mat2Padic a = g - id;
  const PadicNumber tau = g.trace() - PadicNumber::from_integer(2, p, n);
  if (!valuation_exceeds(tau, 2)) {
    throw ConvergenceDomainError("log g needs |Tr g - 2|_p < p^(-2/(p-1)), got v(Tr g - 2) = " +
                                 std::to_string(tau.valuation()));
  }
  const Mat2Padic a2 = a * a;
  const PadicNumber zero = PadicNumber::zero(p, n);
  if (a2.a().is_zero() && a2.b().is_zero() && a2.c().is_zero() && a2.d().is_zero()) return a;
  // A^k = u_k A + w_k I.
  const PadicNumber tr = a.trace();
  const PadicNumber dt = a.det();
  PadicNumber u = one;
  PadicNumber w = zero;
  PadicNumber alpha = zero;
  PadicNumber beta = zero;
  const long vt = tau.is_zero() ? n : tau.valuation();
  const long cap = 2 * (n + std::max(0L, -a.valuation()));
  for (long k = 1;; ++k) {
    if (k > 1 && (k - 1) * vt - 2 * floor_log(k, p) >= cap) break;
    const PadicNumber inv = PadicNumber::from_rational(BigRational(k % 2 == 1 ? 1 : -1, k), p, n);
    alpha += inv * u;
    beta += inv * w;
    const PadicNumber next_u = tr * u + w;
    w = -(dt * u);
    u = next_u;
  }
  return a.scaled(alpha) + id.scaled(beta);
}

long congruence_level(const Mat2Padic& g) {
  const long p = g.prime();
  const long n = g.precision();
  if (!(g.det() == PadicNumber::from_integer(1, p, n))) {
    throw InvalidParameter("congruence_level needs det g = 1, got " + g.det().to_string());
  }
  const Mat2Padic diff = g - Mat2Padic::identity(p, n);
  const long level = std::min(diff.valuation(), g.absolute_precision());
  return std::max(0L, level);
}

}  // namespace rpq::spinzeta
