#include "rpq/spinzeta/matrix.hpp"
#include "rpq/spinzeta/zeta.hpp"
#include "rpq/suites.hpp"

namespace rpq {

namespace {

using spinzeta::Mat2Padic;
using spinzeta::SpinBasis;

void matrix_checks(Report& r, long p, long n) {
  auto lift = [&](const BigRational& v) { return PadicNumber::from_rational(v, p, n); };
  const Mat2Padic id = Mat2Padic::identity(p, n);
  const Mat2Padic zero = Mat2Padic::zero(p, n);

  for (long i = 0; i <= 2; ++i) {
    const BigRational hbar = ipow(BigRational(p), i);
    const SpinBasis s = spinzeta::spin_generators(hbar, p, n);
    const std::string tag = "hbar=p^" + std::to_string(i) + ": ";
    const PadicNumber h = lift(hbar);
    r.asserted(tag + "generators are trace-zero",
               s.minus.trace().is_zero() && s.z.trace().is_zero() && s.plus.trace().is_zero());
    r.asserted(tag + "S_+^2 = S_-^2 = 0", s.plus * s.plus == zero && s.minus * s.minus == zero);
    r.asserted(tag + "[S_z, S_+] = hbar S_+", spinzeta::commutator(s.z, s.plus) == s.plus.scaled(h));
    r.asserted(tag + "[S_z, S_-] = -hbar S_-", spinzeta::commutator(s.z, s.minus) == s.minus.scaled(-h));
    r.asserted(tag + "[S_+, S_-] = 2 hbar S_z", spinzeta::commutator(s.plus, s.minus) == s.z.scaled(lift(2) * h));
    r.measured(tag + "stated coefficients [S_z,S_+] = 2hbar S_+, [S_+,S_-] = hbar S_z",
               spinzeta::commutator(s.z, s.plus) == s.plus.scaled(lift(2) * h) &&
                   spinzeta::commutator(s.plus, s.minus) == s.z.scaled(h));
    r.asserted(tag + "[A, A] = 0", spinzeta::commutator(s.z, s.z) == zero);

    // Coordinates are recovered from the entries: x = c/hbar, y = 2a/hbar, z = b/hbar.
    bool bijective = true;
    for (long x = -2; x <= 2; ++x) {
      for (long y = -2; y <= 2; ++y) {
        for (long z = -2; z <= 2; ++z) {
          Mat2Padic m = spinzeta::spin_combination(s, x, y, z);
          bijective = bijective && m.c() / h == lift(x) && lift(2) * m.a() / h == lift(y) && m.b() / h == lift(z);
        }
      }
    }
    r.asserted(tag + "(x, y, z) -> x S_- + y S_z + z S_+ is injective on a 5x5x5 grid", bijective);
  }

  const SpinBasis s = spinzeta::spin_generators(1, p, n);
  const long k = p == 2 ? 3 : 1;
  const PadicNumber t = lift(ipow(BigRational(p), k));
  r.asserted("exp(0) = I", spinzeta::mat_exp(zero, lift(1)) == id);
  r.asserted("exp(t S_+) = I + t S_+", spinzeta::mat_exp(s.plus, lift(7)) == id + s.plus.scaled(lift(7)));
  const Mat2Padic ez = spinzeta::mat_exp(s.z, t);
  r.asserted("det exp(t S_z) = 1", ez.det() == lift(1), "v>=" + std::to_string(ez.det().agreement(lift(1))));
  r.asserted("log(I) = 0", spinzeta::mat_log(id) == zero);
  r.asserted("log(I + t S_+) = t S_+", spinzeta::mat_log(id + s.plus.scaled(lift(7))) == s.plus.scaled(lift(7)));
  const Mat2Padic tz = s.z.scaled(t);
  r.asserted("log(exp(t S_z)) = t S_z", spinzeta::mat_log(ez) == tz, "v>=" + std::to_string(spinzeta::mat_log(ez).agreement(tz)));

  bool round = true;
  bool det_one = true;
  for (long x = -2; x <= 2; ++x) {
    for (long z = -2; z <= 2; z += 2) {
      Mat2Padic xm = spinzeta::spin_combination(s, x, 3, z).scaled(t);
      Mat2Padic g = spinzeta::mat_exp(xm, lift(1));
      det_one = det_one && g.det() == lift(1);
      round = round && spinzeta::mat_log(g) == xm && spinzeta::mat_exp(spinzeta::mat_log(g), lift(1)) == g;
    }
  }
  r.asserted("det exp(X) = 1 for trace-zero X on a sample grid", det_one);
  r.asserted("log(exp(X)) = X and exp(log(g)) = g on a sample grid", round);

  bool refused = false;
  try {
    spinzeta::mat_exp(s.z, lift(1));
  } catch (const ConvergenceDomainError&) {
    refused = true;
  }
  r.asserted("exp(S_z) outside the convergence disk is refused", refused);
  refused = false;
  try {
    spinzeta::mat_log(Mat2Padic::from_rationals({2, 1, 1, 1}, p, n));
  } catch (const ConvergenceDomainError&) {
    refused = true;
  }
  r.asserted("log of [[2,1],[1,1]] is refused (Tr g - 2 too large)", refused);

  r.asserted("congruence level of I is the precision", spinzeta::congruence_level(id) == n);
  r.asserted("congruence level of I + p^2 S_+ is 2",
             spinzeta::congruence_level(id + s.plus.scaled(lift(ipow(BigRational(p), 2)))) == 2);
  bool levels = true;
  for (long i = 1; i <= 3; ++i) {
    const SpinBasis si = spinzeta::spin_generators(ipow(BigRational(p), i), p, n);
    const PadicNumber unit_t = lift(p == 2 ? 4 : 1);
    for (const Mat2Padic* g : {&si.minus, &si.z, &si.plus}) {
      levels = levels && spinzeta::congruence_level(spinzeta::mat_exp(*g, unit_t)) >= i;
    }
  }
  r.asserted("exp of the scale-p^i generators lies in K_i for i = 1..3", levels);
}

void zeta_checks(Report& r, long prime) {
  using namespace spinzeta;
  r.asserted("zeta_2(3) = 8/7", zeta_p_factor(2, 0, 1).at_s(3) == BigRational(8, 7));
  r.asserted("zeta_p(3s-1) = 1/(1 - p t^3)",
             zeta_p_factor(prime, 1, 3) ==
                 LocalZetaRational(Polynomial(1), Polynomial(1) - Polynomial::monomial(3, BigRational(prime)), prime));

  // Product form against a factor-by-factor evaluation.
  bool product = true;
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (long s = 2; s <= 5; ++s) {
      BigRational oracle = 1;
      for (auto [a, m] : {std::pair{0L, 1L}, std::pair{1L, 1L}, std::pair{1L, 2L}, std::pair{2L, 2L}}) {
        oracle *= 1 / (1 - ipow(BigRational(p), a - m * s));
      }
      oracle *= 1 - ipow(BigRational(p), 1 - 3 * s);
      product = product && zeta_spin_half(p, s) == oracle;
    }
  }
  r.asserted("zeta_spin_half product form matches factor-by-factor values at 20 (p, s)", product);

  bool pole = false;
  try {
    zeta_spin_half(prime, 1);
  } catch (const PoleError&) {
    pole = true;
  }
  r.asserted("zeta_spin_half at s = 1 reports a pole", pole);

  bool arithmetic = true;
  const LocalZetaRational a = zeta_p_factor(prime, 1, 2);
  const LocalZetaRational b = igusa_Zf(prime % 2 == 0 ? 3 : prime);
  const LocalZetaRational bb = b.prime() == prime ? b : zeta_p_factor(prime, 2, 1);
  for (long k = 1; k <= 10; ++k) {
    const BigRational t = BigRational(k) / (5 * k + 7);
    arithmetic = arithmetic && (a * bb).at_t(t) == a.at_t(t) * bb.at_t(t) && (a + bb).at_t(t) == a.at_t(t) + bb.at_t(t);
  }
  r.asserted("rational-function product and sum evaluate pointwise at 10 rational t", arithmetic);

  if (prime % 2 == 1) {
    const LocalZetaRational zf = igusa_Zf(prime);
    r.asserted("Z_f(s-2) at t = 0 is 1 - 1/p", zf.at_t(0) == 1 - BigRational(1, prime));
    const LocalZetaRational product_form = zeta_spin_half_rational(prime);
    const BigRational direct = product_form.at_s(4);
    for (long i : {0L, -1L}) {
      const BigRational sub = zeta_spin_half_subtraction(prime, i).at_s(4);
      r.measured("subtraction form at s=4, i=" + std::to_string(i) + " equals the product form", sub == direct,
                 to_string(BigRational(sub - direct)));
    }
    r.measured("subtraction form (i=0) equals the product form identically",
               zeta_spin_half_subtraction(prime, 0) == product_form);
    r.measured("intermediate displayed form equals the product form identically",
               zeta_spin_half_intermediate(prime) == product_form,
               to_string(BigRational(zeta_spin_half_intermediate(prime).at_s(4) - direct)));
  }

  bool ghost = true;
  const long go_odd[] = {0, 3, 8, 15, 24};
  const BigRational gsp[] = {BigRational(-1), BigRational(1), BigRational(4), BigRational(8), BigRational(13)};
  const BigRational go_even[] = {BigRational(-2), BigRational(-1), BigRational(1), BigRational(4), BigRational(8)};
  for (long l = 1; l <= 5; ++l) {
    ghost = ghost && ghost_boundary(GhostGroup::go_odd, l) == go_odd[l - 1] &&
            ghost_boundary(GhostGroup::gsp, l) == gsp[l - 1] &&
            ghost_boundary(GhostGroup::go_even_plus, l) == go_even[l - 1];
  }
  r.asserted("ghost boundaries for l = 1..5", ghost);
}

}  // namespace

Report run_spinzeta_suite(const SuiteContext& ctx) {
  Report r;
  r.suite = "spinzeta";
  matrix_checks(r, ctx.prime, ctx.precision);
  zeta_checks(r, ctx.prime);
  return r;
}

}  // namespace rpq
