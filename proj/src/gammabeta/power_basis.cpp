#include "rpq/gammabeta/power_basis.hpp"

#include "rpq/series/functions.hpp"

namespace rpq::gammabeta {

namespace {

std::string tag(long n, long k) { return " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

void check_equal(Report& r, const std::string& name, bool asserted, const BigRational& lhs, const BigRational& rhs) {
  BigRational d = lhs - rhs;
  std::string detail = "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
  if (asserted) {
    r.asserted(name, d == 0, to_string(d), detail);
  } else {
    r.measured(name, d == 0, to_string(d), detail);
  }
}

void check_equal(Report& r, const std::string& name, bool asserted, const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial d = lhs - rhs;
  if (asserted) {
    r.asserted(name, d.is_zero(), d.to_string("x"));
  } else {
    r.measured(name, d.is_zero(), d.to_string("x"));
  }
}

Polynomial derivative_k(Polynomial f, long k, const RationalParams& params) {
  for (long i = 0; i < k; ++i) f = series::rpq_derivative(f, params);
  return f;
}

series::FormalSeries derivative_k(series::FormalSeries f, long k, const RationalParams& params) {
  for (long i = 0; i < k; ++i) f = series::rpq_derivative(f, params);
  return f;
}

}  // namespace

Polynomial power_basis_polynomial(const BigRational& c, const BigRational& a, long n, const RationalParams& params) {
  if (n < 0) throw InvalidParameter("power basis polynomial needs n >= 0");
  Polynomial out(1);
  BigRational s = c;
  BigRational t = a;
  for (long i = 0; i < n; ++i) {
    out *= Polynomial::monomial(1, s) - Polynomial(t);
    s *= params.xi1();
    t *= params.xi2();
  }
  return out;
}

Polynomial reverse_power_basis_polynomial(const BigRational& a, const BigRational& c, long n,
                                          const RationalParams& params) {
  if (n < 0) throw InvalidParameter("power basis polynomial needs n >= 0");
  Polynomial out(1);
  BigRational s = a;
  BigRational t = c;
  for (long i = 0; i < n; ++i) {
    out *= Polynomial(s) - Polynomial::monomial(1, t);
    s *= params.xi1();
    t *= params.xi2();
  }
  return out;
}

bool twist_is_shift(const RationalParams& params) {
  auto sp = params.shift_pair();
  return sp && sp->alpha == params.xi1() && sp->beta == params.xi2();
}

Report power_basis_identity_suite(const RationalParams& params, long n, long k) {
  if (n < 0 || k < 0) throw InvalidParameter("identity suite needs n, k >= 0");
  Report r;
  r.suite = "power_basis_identities";
  const BigRational x(3, 2);
  const BigRational y(1, 3);
  const BigRational& x1 = params.xi1();
  const BigRational& x2 = params.xi2();
  auto pb = [&](const BigRational& a, const BigRational& b, long m, Sign s = Sign::minus) {
    return power_basis(a, b, m, s, params);
  };
  const std::string t = tag(n, k);

  check_equal(r, "(vii) shifted k-fold quotient" + t, true, pb(x * ipow(x1, n), y * ipow(x2, n), k),
              pb(x, y, k) * pb(x * ipow(x1, k), y * ipow(x2, k), n) / pb(x, y, n));
  check_equal(r, "(viii) splitting (x-y)^(n+k)" + t, true, pb(x, y, n + k),
              pb(x, y, n) * pb(x * ipow(x1, n), y * ipow(x2, n), k));
  const long hi = std::max(n, k);
  const long lo = std::min(n, k);
  check_equal(r, "(ix) quotient (x-y)^n/(x-y)^k" + tag(hi, lo), true,
              pb(x * ipow(x1, lo), y * ipow(x2, lo), hi - lo), pb(x, y, hi) / pb(x, y, lo));
  check_equal(r, "(x) double shift" + tag(hi, lo), true, pb(x * ipow(x1, 2 * lo), y * ipow(x2, 2 * lo), hi - lo),
              pb(x, y, hi) * pb(x * ipow(x1, hi), y * ipow(x2, hi), lo) / pb(x, y, 2 * lo));

  const RationalParams sq = params.powered(2);
  check_equal(r, "(xi) doubling (x-y)^(2n)" + t, true, pb(x, y, 2 * n),
              power_basis(x, y, n, Sign::minus, sq) * power_basis(BigRational(x * x1), BigRational(y * x2), n, Sign::minus, sq));

  const RationalParams cube = params.powered(3);
  BigRational tripled = power_basis(x, y, n, Sign::minus, cube) *
                        power_basis(BigRational(x * x1), BigRational(y * x2), n, Sign::minus, cube) *
                        power_basis(BigRational(x * x1 * x1), BigRational(y * x2 * x2), n, Sign::minus, cube);
  check_equal(r, "(xii) tripling with R(p^3, q^3) in every factor" + t, true, pb(x, y, 3 * n), tripled);
  BigRational printed = power_basis(x, y, n, Sign::minus, sq) *
                        power_basis(BigRational(x * x1), BigRational(y * x2), n, Sign::minus, cube) *
                        power_basis(BigRational(x * x1 * x1), BigRational(y * x2 * x2), n, Sign::minus, cube);
  check_equal(r, "(xii) tripling as printed, R(p^2, q^2) in the first factor" + t, false, pb(x, y, 3 * n), printed);

  const long kk = std::max<long>(k, 1);
  const RationalParams pk = params.powered(kk);
  BigRational prod = 1;
  for (long i = 0; i < kk; ++i) {
    prod *= power_basis(BigRational(x * ipow(x1, i)), BigRational(y * ipow(x2, i)), n, Sign::plus, pk);
  }
  check_equal(r, "(xiv) k-fold splitting (x+y)^(kn)" + tag(n, kk), true, pb(x, y, kk * n, Sign::plus), prod);

  check_equal(r, "n = 0 gives the empty product", true, pb(x, y, 0), BigRational(1));
  check_equal(r, "(x-y)^(-n) (x xi1^-n - y xi2^-n)^n = 1" + t, true,
              pb(x, y, -n) * pb(x * ipow(x1, -n), y * ipow(x2, -n), n), BigRational(1));
  return r;
}

Report power_basis_derivative_suite(const RationalParams& params, long n, long k) {
  if (k < 1 || n < k) throw InvalidParameter("derivative suite needs n >= k >= 1");
  Report r;
  r.suite = "power_basis_derivatives";
  const bool shift = twist_is_shift(params);
  const BigRational a(2, 3);
  const BigRational& x1 = params.xi1();
  const BigRational& x2 = params.xi2();
  const std::string t = tag(n, k);
  const BigRational ratio = params.factorial(n) / params.factorial(n - k);

  Polynomial fwd = power_basis_polynomial(1, a, n, params);
  check_equal(r, "d (x-a)^n = [n] (xi1 x - a)^(n-1)" + t, shift, series::rpq_derivative(fwd, params),
              params.number(n) * power_basis_polynomial(x1, a, n - 1, params));
  check_equal(r, "d^k (x-a)^n = xi1^C(k,2) [n]!/[n-k]! (xi1^k x - a)^(n-k)" + t, shift,
              derivative_k(fwd, k, params),
              ipow(x1, choose2(k)) * ratio * power_basis_polynomial(ipow(x1, k), a, n - k, params));

  Polynomial rev = reverse_power_basis_polynomial(a, 1, n, params);
  const BigRational sign = k % 2 == 0 ? 1 : -1;
  check_equal(r, "d (a-x)^n = -[n] (a - xi2 x)^(n-1)" + t, shift, series::rpq_derivative(rev, params),
              -params.number(n) * reverse_power_basis_polynomial(a, x2, n - 1, params));
  check_equal(r, "d^k (a-x)^n = (-1)^k xi2^C(k,2) [n]!/[n-k]! (a - xi2^k x)^(n-k)" + t, shift,
              derivative_k(rev, k, params),
              sign * ipow(x2, choose2(k)) * ratio * reverse_power_basis_polynomial(a, ipow(x2, k), n - k, params));
  check_equal(r, "printed reverse rule applied to (x-a)^n" + t, false, derivative_k(fwd, k, params),
              sign * ipow(x2, choose2(k)) * ratio * reverse_power_basis_polynomial(a, ipow(x2, k), n - k, params));

  // Reciprocal rules: the deformed derivative acts as scale * (f(alpha x) - f(beta x))/((alpha - beta) x).
  auto sp = params.shift_pair();
  if (sp && sp->alpha != sp->beta) {
    const BigRational x0(5, 7);
    auto d = [&](auto f) -> BigRational {
      return sp->scale * (f(BigRational(sp->alpha * x0)) - f(BigRational(sp->beta * x0))) /
             ((sp->alpha - sp->beta) * x0);
    };
    auto inv_fwd = [&](const BigRational& x) -> BigRational { return 1 / power_basis(x, a, n, Sign::minus, params); };
    auto inv_rev = [&](const BigRational& x) -> BigRational { return 1 / power_basis(a, x, n, Sign::minus, params); };
    check_equal(r, "d 1/(x-a)^n = -xi2 [n]/(xi2 x - a)^(n+1) at x=5/7" + t, shift, d(inv_fwd),
                -x2 * params.number(n) / power_basis(BigRational(x2 * x0), a, n + 1, Sign::minus, params));
    check_equal(r, "d 1/(a-x)^n = xi1 [n]/(a - xi1 x)^(n+1) at x=5/7" + t, shift, d(inv_rev),
                x1 * params.number(n) / power_basis(a, BigRational(x1 * x0), n + 1, Sign::minus, params));
  } else {
    r.measured("reciprocal rules", true, {}, "skipped: no two-point difference form for this binding");
  }

  // Exponential rules at coefficient level.
  const long order = 12;
  const BigRational lambda(3, 5);
  auto exp_check = [&](const std::string& name, bool asserted, bool upper, const BigRational& base, long m) {
    auto e = [&](long ord) { return upper ? series::exp_upper(params, ord) : series::exp_lower(params, ord); };
    auto lhs = derivative_k(e(order).scaled_argument(lambda), m, params);
    auto rhs = ipow(lambda, m) * ipow(upper ? x2 : x1, choose2(m)) *
               e(order - m).scaled_argument(lambda * ipow(base, m));
    auto diff = lhs - rhs;
    bool ok = true;
    for (const auto& c : diff.coefficients()) ok = ok && c == 0;
    if (asserted) {
      r.asserted(name, ok, ok ? "0" : "nonzero coefficients");
    } else {
      r.measured(name, ok, ok ? "0" : "nonzero coefficients");
    }
  };
  exp_check("d e(lz) = l e(l xi1 z)", true, false, x1, 1);
  exp_check("d E(lz) = l E(l xi2 z)", true, true, x2, 1);
  exp_check("d E(lz) = l E(l xi1 z) as printed", false, true, x1, 1);
  exp_check("d^n e(lz) = l^n xi1^C(n,2) e(l xi1^n z) (n=" + std::to_string(k) + ")", true, false, x1, k);
  exp_check("d^n E(lz) = l^n xi2^C(n,2) E(l xi2^n z) (n=" + std::to_string(k) + ")", true, true, x2, k);

  // Expansion of e(lz) in the power basis at a = 0.
  if (x1 != x2) {
    bool coeff_ok = true;
    for (long m = 0; m <= order; ++m) {
      BigRational lhs = ipow(BigRational((x1 - x2) * lambda), m) / power_basis(x1, x2, m, Sign::minus, params);
      BigRational rhs = ipow(lambda, m) / params.factorial(m);
      coeff_ok = coeff_ok && lhs == rhs;
    }
    if (params.twist_matches_shift()) {
      r.asserted("((xi1-xi2) l)^n/(xi1 - xi2)^n = l^n/[n]!", coeff_ok);
    } else {
      r.measured("((xi1-xi2) l)^n/(xi1 - xi2)^n = l^n/[n]!", coeff_ok);
    }
  }
  Polynomial expansion;
  for (long m = 0; m <= order; ++m) {
    expansion += (ipow(lambda, m) / params.factorial(m)) * power_basis_polynomial(1, 0, m, params);
  }
  Polynomial direct = series::exp_lower(params, order).scaled_argument(lambda).to_polynomial();
  check_equal(r, "e(lz) = sum l^n/[n]! (x - 0)^n to order 12", true, expansion, direct);
  return r;
}

}  // namespace rpq::gammabeta
