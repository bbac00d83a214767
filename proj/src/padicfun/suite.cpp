#include "rpq/padicfun/gamma.hpp"
#include "rpq/padicfun/volkenborn.hpp"
#include "rpq/suites.hpp"

namespace rpq {

namespace {

using padicfun::TwistParams;

// Twist (1 + p, 1 + 2p) for odd p and (1 + 4, 1 + 8) for p = 2.
TwistParams default_twist(long p, long precision, deform::StructureFunction structure = {}) {
  const long step = p == 2 ? 4 : p;
  return TwistParams(p, BigRational(1 + step), BigRational(1 + 2 * step), precision, std::move(structure));
}

void morita_regression(Report& r, long p, long precision) {
  TwistParams classical = TwistParams::classical(p, precision);
  bool ok = true;
  BigInt product = 1;
  for (long n = 0; n <= 3 * p; ++n) {
    if (n >= 2 && (n - 1) % p != 0) product *= n - 1;
    BigRational expected = n % 2 == 0 ? BigRational(product) : BigRational(-product);
    ok = ok && padicfun::padic_gamma_rpq(n, classical) == classical.lift(expected);
  }
  r.asserted("classical limit: Gamma^p(n) = (-1)^n prod_{j<n, p!|j} j for n <= 3p", ok);
}

}  // namespace

Report run_padicfun_suite(const SuiteContext& ctx) {
  Report r;
  r.suite = "padicfun";
  const long p = ctx.prime;
  const long n = ctx.precision;
  TwistParams tw = default_twist(p, n);
  const std::string tag = tw.describe() + ": ";
  r.merge(padicfun::padic_gamma_suite(tw, 30), tag);
  r.merge(padicfun::padic_beta_suite(tw), tag);
  r.merge(padicfun::volkenborn_suite(tw, padicfun::kDefaultLevels), tag);

  TwistParams classical = TwistParams::classical(p, n);
  r.merge(padicfun::padic_gamma_suite(classical, 30), "classical limit: ");
  r.merge(padicfun::padic_beta_suite(classical), "classical limit: ");
  r.merge(padicfun::volkenborn_suite(classical, padicfun::kDefaultLevels), "classical limit: ");
  morita_regression(r, p, n);

  TwistParams kim(p, 1, BigRational(1 + (p == 2 ? 4 : p)), n);
  r.merge(padicfun::volkenborn_suite(kim, 4), "rho = 1: ");

  for (deform::Preset preset : deform::all_presets()) {
    if (preset == deform::Preset::jagannathan_srinivasa) continue;
    TwistParams other = default_twist(p, n, deform::StructureFunction(preset));
    r.merge(padicfun::padic_gamma_suite(other, 12), other.describe() + ": ");
    r.merge(padicfun::padic_beta_suite(other), other.describe() + ": ");
  }
  if (p % 2 == 1) r.merge(padicfun::fermionic_suite(p, n), "fermionic: ");

  if (p == 2) {
    bool rejected = false;
    try {
      padicfun::volkenborn_measure(0, 1, TwistParams(2, BigRational(3), BigRational(5), n));
    } catch (const ConvergenceDomainError&) {
      rejected = true;
    }
    r.asserted("twists with v(rho - 1) = 1 at p = 2 are rejected for the measure", rejected);
  }
  return r;
}

}  // namespace rpq
