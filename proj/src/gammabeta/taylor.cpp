#include "rpq/gammabeta/taylor.hpp"

#include "rpq/gammabeta/power_basis.hpp"
#include "rpq/series/functions.hpp"

namespace rpq::gammabeta {

TaylorForm parse_taylor_form(std::string_view name) {
  if (name == "forward") return TaylorForm::forward;
  if (name == "reverse") return TaylorForm::reverse;
  throw InvalidParameter("unknown Taylor form '" + std::string(name) + "'");
}

std::string taylor_form_name(TaylorForm form) { return form == TaylorForm::forward ? "forward" : "reverse"; }

std::vector<BigRational> taylor_expand(const Polynomial& f, const BigRational& a, const RationalParams& params,
                                       TaylorForm form) {
  const long n = std::max<long>(f.degree(), 0);
  const BigRational& xi = form == TaylorForm::forward ? params.xi1() : params.xi2();
  if (xi == 0) throw InvalidParameter("Taylor expansion needs a nonzero twist base");
  std::vector<BigRational> out(static_cast<std::size_t>(n + 1));
  Polynomial d = f;
  BigRational fact = 1;
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      d = series::rpq_derivative(d, params);
      fact *= params.number(k);
    }
    if (fact == 0) throw SingularityError("[" + std::to_string(k) + "]! vanishes");
    BigRational c = ipow(xi, -choose2(k)) * d.eval(BigRational(a * ipow(xi, -k))) / fact;
    if (form == TaylorForm::reverse && k % 2 == 1) c = -c;
    out[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

Polynomial taylor_reconstruct(const std::vector<BigRational>& coefficients, const BigRational& a,
                              const RationalParams& params, TaylorForm form) {
  Polynomial out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const long m = static_cast<long>(k);
    Polynomial basis = form == TaylorForm::forward ? power_basis_polynomial(1, a, m, params)
                                                   : reverse_power_basis_polynomial(a, 1, m, params);
    out += Polynomial(coefficients[k]) * basis;
  }
  return out;
}

Report taylor_suite(const RationalParams& params, long max_degree) {
  Report r;
  r.suite = "taylor";
  const bool shift = twist_is_shift(params) || params.classical_limit();
  const std::vector<BigRational> points = {BigRational(0), BigRational(2, 3), BigRational(-5, 4)};
  for (long deg = 0; deg <= max_degree; ++deg) {
    std::vector<BigRational> c(static_cast<std::size_t>(deg + 1));
    for (long i = 0; i <= deg; ++i) c[static_cast<std::size_t>(i)] = BigRational(BigRational((i * 7 + 3) % 11 - 5) / (i + 1));
    Polynomial f = Polynomial::from_coefficients(c);
    for (const auto& a : points) {
      for (TaylorForm form : {TaylorForm::forward, TaylorForm::reverse}) {
        Polynomial g = taylor_reconstruct(taylor_expand(f, a, params, form), a, params, form);
        Polynomial d = g - f;
        std::string name = taylor_form_name(form) + " Taylor reconstruction (deg=" + std::to_string(deg) +
                           ", a=" + to_string(a) + ")";
        if (shift) {
          r.asserted(name, d.is_zero(), d.to_string("x"));
        } else {
          r.measured(name, d.is_zero(), d.to_string("x"));
        }
      }
    }
  }
  return r;
}

}  // namespace rpq::gammabeta
