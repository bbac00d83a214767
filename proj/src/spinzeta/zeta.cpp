#include "rpq/spinzeta/zeta.hpp"

#include "rpq/arith/errors.hpp"

namespace rpq::spinzeta {

namespace {

Polynomial one_minus(const BigRational& c, long degree) { return Polynomial(1) - Polynomial::monomial(degree, c); }

void require_same_prime(const LocalZetaRational& x, const LocalZetaRational& y) {
  if (x.prime() != y.prime()) throw InvalidParameter("local zeta functions at different primes");
}

BigRational prime_power(long p, long e) { return ipow(BigRational(p), e); }

}  // namespace

LocalZetaRational::LocalZetaRational(Polynomial numerator, Polynomial denominator, long prime)
    : num_(std::move(numerator)), den_(std::move(denominator)), prime_(prime) {
  if (den_.is_zero()) throw DivisionByZero("local zeta function with a zero denominator");
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  BigRational lead = den_.coefficient(0) != 0 ? den_.coefficient(0) : den_.leading_coefficient();
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  num_ = BigRational(1 / lead) * num_;
  den_ = BigRational(1 / lead) * den_;
}

LocalZetaRational LocalZetaRational::constant(const BigRational& c, long prime) {
  return LocalZetaRational(Polynomial(c), Polynomial(1), prime);
}

BigRational LocalZetaRational::at_t(const BigRational& t) const {
  BigRational d = den_.eval(t);
  if (d == 0) throw PoleError("local zeta function has a pole at t = " + rpq::to_string(t));
  return num_.eval(t) / d;
}

BigRational LocalZetaRational::at_s(long s) const { return at_t(prime_power(prime_, -s)); }

LocalZetaRational operator*(const LocalZetaRational& x, const LocalZetaRational& y) {
  require_same_prime(x, y);
  return LocalZetaRational(x.num_ * y.num_, x.den_ * y.den_, x.prime_);
}

LocalZetaRational operator/(const LocalZetaRational& x, const LocalZetaRational& y) {
  require_same_prime(x, y);
  if (y.num_.is_zero()) throw DivisionByZero("division by the zero local zeta function");
  return LocalZetaRational(x.num_ * y.den_, x.den_ * y.num_, x.prime_);
}

LocalZetaRational operator+(const LocalZetaRational& x, const LocalZetaRational& y) {
  require_same_prime(x, y);
  return LocalZetaRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, x.prime_);
}

LocalZetaRational operator-(const LocalZetaRational& x, const LocalZetaRational& y) {
  require_same_prime(x, y);
  return LocalZetaRational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_, x.prime_);
}

bool operator==(const LocalZetaRational& x, const LocalZetaRational& y) {
  return x.prime_ == y.prime_ && x.num_ * y.den_ == y.num_ * x.den_;
}

std::string LocalZetaRational::to_string() const { return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")"; }

LocalZetaRational zeta_p_factor(long prime, long shift_a, long multiplier_m) {
  if (multiplier_m < 1) throw InvalidParameter("zeta_p factor needs a multiplier m >= 1");
  return LocalZetaRational(Polynomial(1), one_minus(prime_power(prime, shift_a), multiplier_m), prime);
}

LocalZetaRational igusa_Zf(long prime) {
  if (prime % 2 == 0) throw InvalidParameter("igusa_Zf needs an odd prime");
  const BigRational inv(1, prime);
  Polynomial num = Polynomial(BigRational(1 - inv)) * one_minus(inv, 1);
  Polynomial den = one_minus(BigRational(prime), 2) * one_minus(BigRational(prime), 1);
  return LocalZetaRational(num, den, prime);
}

LocalZetaRational zeta_abelian_rank3(long prime) {
  return zeta_p_factor(prime, 0, 1) * zeta_p_factor(prime, 1, 1) * zeta_p_factor(prime, 2, 1);
}

LocalZetaRational zeta_spin_half_rational(long prime) {
  return zeta_p_factor(prime, 0, 1) * zeta_p_factor(prime, 1, 1) * zeta_p_factor(prime, 1, 2) *
         zeta_p_factor(prime, 2, 2) / zeta_p_factor(prime, 1, 3);
}

LocalZetaRational zeta_spin_half_subtraction(long prime, long i) {
  // p^((2-s)(i+1)) = p^(2(i+1)) t^(i+1).
  const long e = i + 1;
  Polynomial shift_num = e >= 0 ? Polynomial::monomial(e, prime_power(prime, 2 * e)) : Polynomial(prime_power(prime, 2 * e));
  Polynomial shift_den = e >= 0 ? Polynomial(1) : Polynomial::monomial(-e);
  LocalZetaRational shift(shift_num, shift_den, prime);
  LocalZetaRational scale = LocalZetaRational::constant(BigRational(1 / (1 - BigRational(1, prime))), prime);
  return zeta_abelian_rank3(prime) - igusa_Zf(prime) * zeta_p_factor(prime, 2, 2) * shift * scale;
}

LocalZetaRational zeta_spin_half_intermediate(long prime) {
  const BigRational p(prime);
  Polynomial num = one_minus(BigRational(1, prime), 1) * Polynomial::monomial(1, p * p);
  Polynomial den = one_minus(p, 1) * one_minus(p * p, 1) * one_minus(p, 2) * one_minus(p * p, 2);
  return zeta_abelian_rank3(prime) - LocalZetaRational(num, den, prime);
}

std::string factor_name(long shift_a, long multiplier_m) {
  std::string arg = multiplier_m == 1 ? "s" : std::to_string(multiplier_m) + "s";
  if (shift_a > 0) arg += "-" + std::to_string(shift_a);
  if (shift_a < 0) arg += "+" + std::to_string(-shift_a);
  return "zeta_p(" + arg + ")";
}

BigRational zeta_spin_half(long prime, long s) {
  struct Factor {
    long a;
    long m;
    bool inverse;
  };
  const Factor factors[] = {{0, 1, false}, {1, 1, false}, {1, 2, false}, {2, 2, false}, {1, 3, true}};
  std::string poles;
  for (const auto& f : factors) {
    if (f.m * s - f.a == 0) {
      poles += (poles.empty() ? "" : ", ") + factor_name(f.a, f.m) + (f.inverse ? " (inverted)" : "");
    }
  }
  if (!poles.empty()) {
    throw PoleError("zeta_spin_half at p=" + std::to_string(prime) + ", s=" + std::to_string(s) + ": pole of " + poles);
  }
  return zeta_spin_half_rational(prime).at_s(s);
}

GhostGroup parse_ghost_group(const std::string& name) {
  if (name == "GO_odd" || name == "go_odd" || name == "GO") return GhostGroup::go_odd;
  if (name == "GSp" || name == "gsp") return GhostGroup::gsp;
  if (name == "GO_even_plus" || name == "go_even_plus" || name == "GO+") return GhostGroup::go_even_plus;
  throw InvalidParameter("unknown ghost group '" + name + "' (GO_odd, GSp, GO_even_plus)");
}

std::string ghost_group_name(GhostGroup g) {
  switch (g) {
    case GhostGroup::go_odd: return "GO_odd";
    case GhostGroup::gsp: return "GSp";
    case GhostGroup::go_even_plus: return "GO_even_plus";
  }
  return "?";
}

BigRational ghost_boundary(GhostGroup group, long l) {
  if (l < 1) throw InvalidParameter("ghost_boundary needs l >= 1");
  switch (group) {
    case GhostGroup::go_odd: return BigRational(l * l - 1);
    case GhostGroup::gsp: return BigRational(BigRational(l * (l + 1)) / 2 - 2);
    case GhostGroup::go_even_plus: return BigRational(BigRational(l * (l - 1)) / 2 - 2);
  }
  return 0;
}

}  // namespace rpq::spinzeta
