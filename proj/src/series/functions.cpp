#include "rpq/series/functions.hpp"

#include <cctype>

namespace rpq::series {

Polynomial rpq_derivative(const Polynomial& f, const RationalParams& params) {
  Polynomial out;
  for (const auto& [n, c] : f.terms()) {
    if (n > 0) out.set_coefficient(n - 1, c * params.number(n));
  }
  return out;
}

FormalSeries rpq_derivative(const FormalSeries& f, const RationalParams& params) {
  if (f.laurent()) throw InvalidParameter("derivative of a Laurent-mode series is not supported");
  const auto& c = f.coefficients();
  if (f.order() == 0) return FormalSeries({BigRational(0)}, f.normalization(), f.factorials());
  std::vector<BigRational> out(c.size() - 1);
  if (f.normalization() == Normalization::factorial) {
    for (std::size_t n = 1; n < c.size(); ++n) out[n - 1] = c[n];
    return FormalSeries(std::move(out), Normalization::factorial, f.factorials());
  }
  for (std::size_t n = 1; n < c.size(); ++n) out[n - 1] = c[n] * params.number(static_cast<long>(n));
  return FormalSeries(std::move(out));
}

Polynomial rpq_antiderivative(const Polynomial& f, const RationalParams& params) {
  Polynomial out;
  for (const auto& [n, c] : f.terms()) {
    BigRational d = params.number(n + 1);
    if (d == 0) throw SingularityError("[" + std::to_string(n + 1) + "]_R vanishes; antiderivative undefined");
    out.set_coefficient(n + 1, c / d);
  }
  return out;
}

FormalSeries rpq_antiderivative(const FormalSeries& f, const RationalParams& params) {
  if (f.laurent()) throw InvalidParameter("antiderivative of a Laurent-mode series is not supported");
  const auto& c = f.coefficients();
  std::vector<BigRational> out(c.size() + 1);
  if (f.normalization() == Normalization::factorial) {
    for (std::size_t n = 0; n < c.size(); ++n) out[n + 1] = c[n];
    return FormalSeries(std::move(out), Normalization::factorial, factorial_table(params, f.order() + 1));
  }
  for (std::size_t n = 0; n < c.size(); ++n) {
    BigRational d = params.number(static_cast<long>(n) + 1);
    if (d == 0) throw SingularityError("[" + std::to_string(n + 1) + "]_R vanishes; antiderivative undefined");
    out[n + 1] = c[n] / d;
  }
  return FormalSeries(std::move(out));
}

std::vector<BigRational> factorial_table(const RationalParams& params, long order) {
  std::vector<BigRational> f(static_cast<std::size_t>(order + 1));
  f[0] = 1;
  for (long n = 1; n <= order; ++n) f[static_cast<std::size_t>(n)] = f[static_cast<std::size_t>(n - 1)] * params.number(n);
  return f;
}

namespace {

FormalSeries exponential(const RationalParams& params, const BigRational& xi, long order) {
  if (order < 0) throw InvalidParameter("series order must be non-negative");
  auto fact = factorial_table(params, order);
  std::vector<BigRational> c(static_cast<std::size_t>(order + 1));
  for (long n = 0; n <= order; ++n) {
    const auto& f = fact[static_cast<std::size_t>(n)];
    if (f == 0) throw SingularityError("deformed factorial [" + std::to_string(n) + "]! vanishes");
    c[static_cast<std::size_t>(n)] = ipow(xi, choose2(n)) / f;
  }
  return FormalSeries(std::move(c));
}

FormalSeries exponential(const RationalParams& params, Convention convention, long order) {
  return exponential(params, convention == Convention::lower ? params.xi1() : params.xi2(), order);
}

/// Even part of e(iz) (cos) or odd part divided by i (sin), at coefficient level.
FormalSeries rotated_part(const FormalSeries& e, bool even) {
  std::vector<BigRational> c(e.coefficients().size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    bool is_even = n % 2 == 0;
    if (is_even != even) continue;
    long quarter = static_cast<long>(even ? n / 2 : (n - 1) / 2);
    c[n] = quarter % 2 == 0 ? e.coefficients()[n] : -e.coefficients()[n];
  }
  return FormalSeries(std::move(c));
}

}  // namespace

FormalSeries exp_lower(const RationalParams& params, long order) { return exponential(params, params.xi1(), order); }

FormalSeries exp_upper(const RationalParams& params, long order) { return exponential(params, params.xi2(), order); }

FormalSeries trig_series(const RationalParams& params, std::string_view which, long order, bool laurent) {
  if (which.empty()) throw InvalidParameter("empty trigonometric function name");
  const bool upper = std::isupper(static_cast<unsigned char>(which[0])) != 0;
  std::string name;
  for (char ch : which) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  const bool pole = name == "csc" || name == "coth";
  const long work = pole && laurent ? order + 1 : order;
  FormalSeries e = exponential(params, upper ? Convention::upper : Convention::lower, work);
  auto cos = [&] { return rotated_part(e, true); };
  auto sin = [&] { return rotated_part(e, false); };
  auto cosh = [&] { return e.even_part(); };
  auto sinh = [&] { return e.odd_part(); };
  const FormalSeries one = FormalSeries::constant(1, work);
  auto quotient = [&](const FormalSeries& a, const FormalSeries& b) {
    if (pole && laurent) return divide_laurent(a, b);
    return a / b;
  };
  if (name == "cos") return cos();
  if (name == "sin") return sin();
  if (name == "cosh") return cosh();
  if (name == "sinh") return sinh();
  if (name == "tan") return quotient(sin(), cos());
  if (name == "sec") return quotient(one, cos());
  if (name == "csc") return quotient(one, sin());
  if (name == "tanh") return quotient(sinh(), cosh());
  if (name == "sech") return quotient(one, cosh());
  if (name == "coth") return quotient(cosh(), sinh());
  throw InvalidParameter("unknown trigonometric function '" + std::string(which) + "'");
}

std::vector<BigRational> zigzag_numbers(const RationalParams& params, long count) {
  if (count < 1) throw InvalidParameter("zigzag count must be at least 1");
  const long order = count - 1;
  FormalSeries f = trig_series(params, "sec", order) + trig_series(params, "tan", order);
  return f.to_factorial(factorial_table(params, order)).coefficients();
}

Family parse_family(std::string_view name) {
  if (name == "bernoulli") return Family::bernoulli;
  if (name == "euler") return Family::euler;
  if (name == "genocchi") return Family::genocchi;
  throw InvalidParameter("unknown polynomial family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::bernoulli:
      return "bernoulli";
    case Family::euler:
      return "euler";
    case Family::genocchi:
      return "genocchi";
  }
  return "bernoulli";
}

std::vector<BigRational> generating_polynomials(const RationalParams& params, Family family, const BigRational& x,
                                                long order, Convention convention) {
  if (order < 0) throw InvalidParameter("series order must be non-negative");
  const long work = order + 1;
  FormalSeries e = exponential(params, convention, work);
  FormalSeries exz = e.scaled_argument(x);
  FormalSeries one = FormalSeries::constant(1, work);
  const BigRational two = params.number(2);
  FormalSeries g;
  switch (family) {
    case Family::bernoulli:
      g = exz.shifted_up().truncated(work) / (e - one);
      break;
    case Family::euler:
      g = (two * exz) / (e + one);
      break;
    case Family::genocchi:
      g = (two * exz.shifted_up().truncated(work)) / (e + one);
      break;
  }
  auto values = g.truncated(order).to_factorial(factorial_table(params, order)).coefficients();
  return values;
}

std::vector<BigRational> euler_star_numbers(const RationalParams& params, long order, Convention convention) {
  FormalSeries e = exponential(params, convention, order);
  FormalSeries denom = e + e.scaled_argument(-1);
  FormalSeries g = params.number(2) * FormalSeries::constant(1, order) / denom;
  return g.to_factorial(factorial_table(params, order)).coefficients();
}

Report operator_algebra_check(const RationalParams& params, long n_max) {
  if (n_max < 1) throw InvalidParameter("operator_algebra_check needs n_max >= 1");
  Report r;
  r.suite = "operator_algebra";
  const Polynomial z = Polynomial::z();
  for (long n = 0; n <= n_max; ++n) {
    Polynomial zn = Polynomial::monomial(n);
    Polynomial ada = z * rpq_derivative(zn, params);
    Polynomial aad = rpq_derivative(z * zn, params);
    BigRational en = params.number(n);
    BigRational en1 = params.number(n + 1);
    Polynomial d1 = ada - Polynomial::monomial(n, en);
    Polynomial d2 = aad - Polynomial::monomial(n, en1);
    Polynomial d3 = (aad - ada) - Polynomial::monomial(n, en1 - en);
    std::string tag = " (n=" + std::to_string(n) + ")";
    r.asserted("A+A z^n = [n] z^n" + tag, d1.is_zero(), d1.to_string());
    r.asserted("AA+ z^n = [n+1] z^n" + tag, d2.is_zero(), d2.to_string());
    r.asserted("[A, A+] z^n = ([n+1] - [n]) z^n" + tag, d3.is_zero(), d3.to_string());
  }
  return r;
}

}  // namespace rpq::series
