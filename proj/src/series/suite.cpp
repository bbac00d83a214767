#include "rpq/series/functions.hpp"
#include "rpq/suites.hpp"

namespace rpq {

namespace {

using series::FormalSeries;
using series::Polynomial;

bool all_zero(const FormalSeries& f) {
  for (const auto& c : f.coefficients()) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<BigRational> parse_all(const std::vector<const char*>& text) {
  std::vector<BigRational> out;
  for (const char* t : text) out.push_back(parse_rational(t));
  return out;
}

void calculus_checks(Report& r, const deform::RationalParams& params) {
  const std::string name = params.structure().name();
  bool spectral = true;
  for (long n = 0; n <= 64; ++n) {
    Polynomial d = series::rpq_derivative(Polynomial::monomial(n), params);
    spectral = spectral && d == (n == 0 ? Polynomial() : Polynomial::monomial(n - 1, params.number(n)));
  }
  r.asserted(name + ": d z^n = [n] z^(n-1) for n <= 64", spectral);

  Polynomial f = Polynomial::from_coefficients(parse_all({"3", "-1/2", "0", "7/3", "5", "-2/9", "1/11"}));
  Polynomial di = series::rpq_derivative(series::rpq_antiderivative(f, params), params);
  r.asserted(name + ": d I f = f", di == f, (di - f).to_string());
  Polynomial id = series::rpq_antiderivative(series::rpq_derivative(f, params), params);
  r.asserted(name + ": I d f = f - f(0)", id == f - Polynomial(f.coefficient(0)), (id - f).to_string());

  const long order = 14;
  const BigRational lambda(-2, 3);
  auto lower = series::exp_lower(params, order);
  auto upper = series::exp_upper(params, order);
  auto dl = series::rpq_derivative(lower.scaled_argument(lambda), params) -
            lambda * series::exp_lower(params, order - 1).scaled_argument(lambda * params.xi1());
  r.asserted(name + ": d e(lz) = l e(l xi1 z)", all_zero(dl));
  auto du = series::rpq_derivative(upper.scaled_argument(lambda), params) -
            lambda * series::exp_upper(params, order - 1).scaled_argument(lambda * params.xi2());
  r.asserted(name + ": d E(lz) = l E(l xi2 z)", all_zero(du));

  for (bool up : {false, true}) {
    const auto& e = up ? upper : lower;
    auto cos = series::trig_series(params, up ? "COS" : "cos", order);
    auto sin = series::trig_series(params, up ? "SIN" : "sin", order);
    bool euler = true;
    for (long n = 0; n <= order; ++n) {
      // i^n e_n split into real and imaginary parts.
      BigRational re = 0;
      BigRational im = 0;
      switch (n % 4) {
        case 0: re = e[n]; break;
        case 1: im = e[n]; break;
        case 2: re = -e[n]; break;
        default: im = -e[n]; break;
      }
      euler = euler && cos[n] == re && sin[n] == im;
    }
    r.asserted(name + (up ? ": E(iz) = COS + i SIN" : ": e(iz) = cos + i sin") + " coefficientwise", euler);
  }

  auto tan = series::trig_series(params, "tan", order);
  auto ratio = series::trig_series(params, "sin", order) / series::trig_series(params, "cos", order);
  r.asserted(name + ": tan cos = sin", tan == ratio);

  auto e = series::generating_polynomials(params, series::Family::euler, BigRational(1, 3), 17);
  auto g = series::generating_polynomials(params, series::Family::genocchi, BigRational(1, 3), 17);
  bool link = g[0] == 0;
  for (long n = 0; n <= 16; ++n) {
    link = link && g[static_cast<std::size_t>(n + 1)] == params.number(n + 1) * e[static_cast<std::size_t>(n)];
  }
  r.asserted(name + ": G_(n+1) = [n+1] E_n for n <= 16 at x = 1/3", link);

  r.merge(series::operator_algebra_check(params, 10), name + ": ");
}

}  // namespace

Report run_series_suite(const SuiteContext& ctx) {
  Report r;
  r.suite = "series";
  calculus_checks(r, ctx.params);
  for (deform::Preset preset : deform::all_presets()) {
    if (preset == ctx.params.structure().kind()) continue;
    try {
      calculus_checks(r, deform::make_params(preset, ctx.params.p(), ctx.params.q()));
    } catch (const InvalidParameter& e) {
      r.measured(deform::preset_name(preset) + ": binding at the suite parameters", false, {}, e.what());
    }
  }

  const auto classical = deform::RationalParams::classical(deform::StructureFunction(), BigRational(1));
  auto exp = series::exp_lower(classical, 10);
  bool exp_ok = true;
  BigRational fact = 1;
  for (long n = 0; n <= 10; ++n) {
    if (n > 0) fact *= n;
    exp_ok = exp_ok && exp[n] == 1 / fact;
  }
  r.asserted("classical limit: e(z) = sum z^n/n!", exp_ok);
  auto tan = series::trig_series(classical, "tan", 7);
  r.asserted("classical limit: tan = z + z^3/3 + 2z^5/15 + 17z^7/315",
             tan.coefficients() == parse_all({"0", "1", "0", "1/3", "0", "2/15", "0", "17/315"}));
  auto bern = series::generating_polynomials(classical, series::Family::bernoulli, 0, 8);
  r.asserted("classical limit: B_0..B_8", bern == parse_all({"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30"}));
  auto zig = series::zigzag_numbers(classical, 8);
  r.asserted("classical limit: zigzag A_0..A_7", zig == parse_all({"1", "1", "1", "2", "5", "16", "61", "272"}));
  auto csc = series::trig_series(classical, "csc", 5, true);
  r.asserted("classical limit: csc = 1/z + z/6 + 7z^3/360 + ...",
             csc.leading_exponent() == -1 && csc[0] == 1 && csc[1] == 0 && csc[2] == BigRational(1, 6) &&
                 csc[4] == BigRational(7, 360));
  auto star = series::euler_star_numbers(classical, 6);
  r.asserted("classical limit: [2]/(e(z)+e(-z)) = sech, E*_0..E*_6 = 1,0,-1,0,5,0,-61",
             star == parse_all({"1", "0", "-1", "0", "5", "0", "-61"}));
  return r;
}

}  // namespace rpq
