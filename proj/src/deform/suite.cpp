#include "rpq/suites.hpp"

namespace rpq {

namespace {

using deform::Preset;
using deform::RationalParams;

void preset_checks(Report& r, const RationalParams& params) {
  const std::string name = params.structure().name();
  const Preset preset = params.structure().kind();
  bool numbers = true;
  std::string first_bad;
  for (long n = 0; n <= 64; ++n) {
    BigRational oracle = deform::reference_number(preset, params.p(), params.q(), n);
    if (params.number(n) != oracle && numbers) {
      numbers = false;
      first_bad = "n=" + std::to_string(n);
    }
  }
  r.asserted(name + ": [n] matches the closed form for n <= 64", numbers, {}, first_bad);

  bool recursion = true;
  BigRational f = 1;
  for (long n = 1; n <= 64; ++n) {
    f *= params.number(n);
    recursion = recursion && params.factorial(n) == params.factorial(n - 1) * params.number(n) &&
                deform::rpq_factorial(params, n) == f;
  }
  r.asserted(name + ": [n]! = [n][n-1]! for n <= 64", recursion);

  bool symmetry = true;
  bool pascal = true;
  for (long m = 0; m <= 20; ++m) {
    for (long n = 0; n <= m; ++n) {
      BigRational c = deform::rpq_binomial(params, m, n);
      symmetry = symmetry && c == deform::rpq_binomial(params, m, m - n);
      pascal = pascal && c * params.factorial(n) * params.factorial(m - n) == params.factorial(m);
    }
  }
  r.asserted(name + ": binomial symmetry for m <= 20", symmetry);
  r.asserted(name + ": C(m,n) [n]! [m-n]! = [m]! for m <= 20", pascal);

  if (params.structure().normalized()) {
    bool product = true;
    for (long j = 1; j <= 6; ++j) {
      for (long k = 1; k <= 6; ++k) {
        product = product && params.number(j * k) == params.powered(k).number(j) * params.number(k);
      }
    }
    r.asserted(name + ": [jk] = [j]_{p^k,q^k} [k] for j, k <= 6", product);
  }

  if (params.xi1() != params.xi2()) {
    bool link = true;
    for (long n = 0; n <= 16; ++n) {
      BigRational pb = 1;
      for (long i = 0; i < n; ++i) pb *= ipow(params.xi1(), i + 1) - ipow(params.xi2(), i + 1);
      link = link && pb / ipow(BigRational(params.xi1() - params.xi2()), n) == params.factorial(n);
    }
    const std::string check = name + ": [n]! = (xi1 - xi2)^n/(xi1 - xi2)^n for n <= 16";
    if (params.twist_matches_shift()) {
      r.asserted(check, link);
    } else {
      r.measured(check, link, {}, "scale factor differs from one");
    }
  }
}

}  // namespace

Report run_deform_suite(const SuiteContext& ctx) {
  Report r;
  r.suite = "deform";
  const BigRational& p = ctx.params.p();
  const BigRational& q = ctx.params.q();
  for (Preset preset : deform::all_presets()) {
    try {
      preset_checks(r, deform::make_params(preset, p, q));
    } catch (const InvalidParameter& e) {
      r.measured(deform::preset_name(preset) + ": binding at the suite parameters", false, {}, e.what());
    }
    RationalParams classical = RationalParams::classical(deform::StructureFunction(preset), BigRational(1));
    bool limit = true;
    for (long n = 0; n <= 64; ++n) limit = limit && classical.number(n) == n;
    r.asserted(deform::preset_name(preset) + ": classical limit [n] = n", limit);
  }
  if (q != 1) {
    RationalParams js = deform::make_params(Preset::jagannathan_srinivasa, 1, q);
    RationalParams heine = deform::make_params(Preset::heine, p, q);
    bool same = true;
    for (long n = 0; n <= 20; ++n) same = same && js.number(n) == heine.number(n);
    r.asserted("jagannathan_srinivasa at p = 1 equals heine for n <= 20", same);
  }

  if (q != 1) r.merge(deform::bm_identity_suite(q, 5, 3), "bm: ");
  return r;
}

}  // namespace rpq
