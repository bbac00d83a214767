#include "rpq/padicfun/volkenborn.hpp"

#include <algorithm>

namespace rpq::padicfun {

namespace {

long checked_power(long p, long level) {
  if (level < 0) throw InvalidParameter("Volkenborn level must be >= 0");
  long m = 1;
  for (long i = 0; i < level; ++i) {
    if (m > (1L << 40) / p) throw InvalidParameter("Volkenborn level too deep for p = " + std::to_string(p));
    m *= p;
  }
  return m;
}

// Digits needed so that level sums keep the requested precision.
TwistParams deepened(const TwistParams& tw, long levels) { return tw.with_precision(tw.precision() + 2 * levels + 2); }

PadicNumber first_weight(long level, const TwistParams& tw, const BigRational& kappa) {
  tw.require_volkenborn();
  const long m = checked_power(tw.prime(), level);
  if (tw.classical_limit()) return tw.lift(BigRational(kappa / m));
  return tw.rho().pow(m) / tw.number(m) * tw.lift(kappa);
}

// Sum over the levels of a per-level sampler, with its certificate.
template <class Sum>
LimitReport level_limit(long levels, const Sum& sum) {
  if (levels < 1) throw InvalidParameter("a Volkenborn limit needs at least one level");
  LimitReport report;
  for (long n = 1; n <= levels; ++n) {
    report.levels.push_back(n);
    report.values.push_back(sum(n));
  }
  finish_limit(report);
  return report;
}

std::string certificate_text(const LimitReport& r) {
  std::string s = "difference valuations";
  for (long d : r.difference_valuations) s += " " + std::to_string(d);
  return s;
}

}  // namespace

VolkenbornLevel::VolkenbornLevel(long level, const TwistParams& tw, const BigRational& kappa) : level_(level) {
  const long m = checked_power(tw.prime(), level);
  PadicNumber w = first_weight(level, tw, kappa);
  weights_.reserve(static_cast<std::size_t>(m));
  if (tw.classical_limit()) {
    weights_.assign(static_cast<std::size_t>(m), w);
    return;
  }
  const PadicNumber ratio = tw.q() / tw.rho();
  for (long a = 0; a < m; ++a) {
    weights_.push_back(w);
    w *= ratio;
  }
}

const PadicNumber& VolkenbornLevel::weight(long a) const {
  if (a < 0 || a >= classes()) throw InvalidParameter("residue class index out of range");
  return weights_[static_cast<std::size_t>(a)];
}

PadicNumber volkenborn_measure(long a, long level, const TwistParams& tw, const BigRational& kappa) {
  const long m = checked_power(tw.prime(), level);
  if (a < 0 || a >= m) throw InvalidParameter("volkenborn_measure needs 0 <= a < p^N");
  PadicNumber w = first_weight(level, tw, kappa);
  if (tw.classical_limit()) return w;
  return w * (tw.q() / tw.rho()).pow(a);
}

PadicNumber volkenborn_measure_printed(long a, long level, const TwistParams& tw) {
  const long m = checked_power(tw.prime(), level);
  if (a < 0 || a >= m) throw InvalidParameter("volkenborn_measure needs 0 <= a < p^N");
  PadicNumber w = first_weight(level, tw, 1);
  if (tw.classical_limit()) return w;
  return w * (tw.rho() / tw.q()).pow(a);
}

PadicNumber volkenborn_sum(const IntegerFunction& f, const VolkenbornLevel& level) {
  const auto& w = level.weights();
  PadicNumber s = w.front() - w.front();
  for (long x = 0; x < level.classes(); ++x) s += f(x) * w[static_cast<std::size_t>(x)];
  return s;
}

LimitReport volkenborn_integral(const IntegerFunction& f, long levels, const TwistParams& tw,
                                bool require_convergence) {
  tw.require_volkenborn();
  const TwistParams deep = deepened(tw, levels);
  LimitReport r = level_limit(levels, [&](long n) { return volkenborn_sum(f, VolkenbornLevel(n, deep)); });
  if (require_convergence && !r.converged) {
    throw NoConvergence("Volkenborn sums did not stabilize within " + std::to_string(levels) + " levels (" +
                        certificate_text(r) + ")");
  }
  return r;
}

CarlitzResult carlitz_bernoulli(long n, const BigRational& a, const PadicNumber& x, const TwistParams& tw,
                                long levels) {
  if (n < 0) throw InvalidParameter("carlitz_bernoulli needs n >= 0");
  tw.require_volkenborn();
  const TwistParams deep = deepened(tw, levels);
  const bool classical = deep.classical_limit();
  auto sp = deep.params().shift_pair();
  if (!sp && !classical) throw InvalidParameter("carlitz_bernoulli needs a preset structure function");
  const PadicNumber one = deep.lift(1);
  const PadicNumber xs = x.with_precision(deep.working_precision());
  const PadicNumber rho_a = classical ? one : padic_power(deep.rho(), deep.lift(a));
  const PadicNumber alpha = classical ? one : sp->alpha;
  const PadicNumber beta = classical ? one : sp->beta;
  const PadicNumber scale = classical ? one : sp->scale;
  const PadicNumber alpha_x = classical ? one : padic_power(alpha, xs);
  const PadicNumber beta_x = classical ? one : padic_power(beta, xs);
  const PadicNumber bracket_x = deep.number_at(xs);

  // [u] from alpha^u, beta^u; u itself in the classical limit.
  auto bracket = [&](const PadicNumber& au, const PadicNumber& bu, long u_shift, const PadicNumber& u_base) {
    if (classical) return u_base + deep.lift(u_shift);
    return scale * (au - bu) / (alpha - beta);
  };

  CarlitzResult out;
  out.direct = level_limit(levels, [&](long level) {
    VolkenbornLevel lv(level, deep);
    PadicNumber s = one - one;
    PadicNumber weight_t = one;
    PadicNumber at = alpha_x;
    PadicNumber bt = beta_x;
    for (long t = 0; t < lv.classes(); ++t) {
      s += weight_t * bracket(at, bt, t, xs).pow(n) * lv.weight(t);
      weight_t *= rho_a;
      at *= alpha;
      bt *= beta;
    }
    return s;
  });

  std::vector<BigRational> binom;
  BigInt c = 1;
  for (long r = 0; r <= n; ++r) {
    binom.emplace_back(c);
    c = c * (n - r) / (r + 1);
  }
  const PadicNumber zero_t = deep.lift(0);
  out.binomial = level_limit(levels, [&](long level) {
    VolkenbornLevel lv(level, deep);
    // moments[r] = sum rho^(a t) alpha^((n - r) t) [t]^r mu(t)
    std::vector<PadicNumber> moments(static_cast<std::size_t>(n + 1), one - one);
    std::vector<PadicNumber> alpha_pow(static_cast<std::size_t>(n + 1), one);
    PadicNumber weight_t = one;
    PadicNumber at = one;
    PadicNumber bt = one;
    PadicNumber alpha_t = one;
    for (long t = 0; t < lv.classes(); ++t) {
      const PadicNumber bt_val = bracket(at, bt, t, zero_t);
      std::vector<PadicNumber> bracket_pow(static_cast<std::size_t>(n + 1), one);
      for (long r = 1; r <= n; ++r) bracket_pow[static_cast<std::size_t>(r)] = bracket_pow[static_cast<std::size_t>(r - 1)] * bt_val;
      for (long k = 1; k <= n; ++k) alpha_pow[static_cast<std::size_t>(k)] = alpha_pow[static_cast<std::size_t>(k - 1)] * alpha_t;
      const PadicNumber base = weight_t * lv.weight(t);
      for (long r = 0; r <= n; ++r) {
        moments[static_cast<std::size_t>(r)] +=
            base * alpha_pow[static_cast<std::size_t>(n - r)] * bracket_pow[static_cast<std::size_t>(r)];
      }
      weight_t *= rho_a;
      at *= alpha;
      bt *= beta;
      alpha_t *= alpha;
    }
    PadicNumber s = one - one;
    for (long r = 0; r <= n; ++r) {
      s += deep.lift(binom[static_cast<std::size_t>(r)]) * bracket_x.pow(n - r) * beta_x.pow(r) *
           moments[static_cast<std::size_t>(r)];
    }
    return s;
  });
  return out;
}

LimitReport fermionic_integral(const IntegerFunction& f, long levels, long prime, long precision) {
  if (prime % 2 == 0) throw InvalidParameter("the fermionic integral needs an odd prime");
  return level_limit(levels, [&](long level) {
    const long m = checked_power(prime, level);
    PadicNumber s = PadicNumber::zero(prime, precision + 2 * levels);
    for (long x = 0; x < m; ++x) s += x % 2 == 0 ? f(x) : -f(x);
    return s;
  });
}

Report volkenborn_suite(const TwistParams& tw, long levels) {
  Report r;
  tw.require_volkenborn();
  const long p = tw.prime();
  const long digits = tw.precision();
  const bool js = tw.structure().kind() == deform::Preset::jagannathan_srinivasa || tw.classical_limit();
  const TwistParams deep = deepened(tw, levels);
  auto lift = [&](const BigRational& v) { return deep.lift(v); };

  // Distribution relation at every level below the budget.
  bool relation = true;
  bool printed = true;
  for (long n = 0; n + 1 < std::min(levels, 4L); ++n) {
    const long m = checked_power(p, n);
    for (long a = 0; a < m; ++a) {
      PadicNumber coarse = volkenborn_measure(a, n, deep);
      PadicNumber fine = lift(0);
      PadicNumber fine_printed = lift(0);
      PadicNumber coarse_printed = volkenborn_measure_printed(a, n, deep);
      for (long i = 0; i < p; ++i) {
        fine += volkenborn_measure(a + i * m, n + 1, deep);
        fine_printed += volkenborn_measure_printed(a + i * m, n + 1, deep);
      }
      relation = relation && agrees_relative(coarse, fine, digits);
      printed = printed && agrees_relative(coarse_printed, fine_printed, digits);
    }
  }
  const std::string rel = "sum_i mu(a + i p^N + p^(N+1) Z_p) = mu(a + p^N Z_p)";
  if (js) {
    r.asserted(rel, relation);
  } else {
    r.measured(rel, relation, {}, "measure written for the (rho^n - q^n)/(rho - q) kernel");
  }
  r.measured("distribution relation with the printed ratio (rho/q)^a", printed);

  // Total mass: the integral of 1 equals the level-0 weight rho/[1].
  LimitReport mass = volkenborn_integral([&](long) { return lift(1); }, levels, tw);
  PadicNumber level0 = volkenborn_measure(0, 0, deep);
  bool mass_ok = true;
  for (const auto& v : mass.values) mass_ok = mass_ok && agrees_relative(v, level0, digits);
  if (js) {
    r.asserted("integral of 1 equals the total mass mu(Z_p) at every level", mass_ok);
  } else {
    r.measured("integral of 1 equals the total mass mu(Z_p) at every level", mass_ok);
  }

  // Moments of t.
  LimitReport first = volkenborn_integral([&](long x) { return lift(x); }, levels, tw);
  r.asserted("integral of t: successive differences have increasing valuation", first.converged, {},
             certificate_text(first));
  if (tw.classical_limit()) {
    r.asserted("integral of 1 = B_0 = 1 over " + std::to_string(levels) + " levels",
               mass.converged && mass.value == lift(1), {}, certificate_text(mass));
    r.asserted("integral of t = B_1 = -1/2 over " + std::to_string(levels) + " levels",
               first.converged && first.value.agrees_with(lift(BigRational(-1, 2)), first.certified_digits) &&
                   first.certified_digits >= levels - (p == 2 ? 2 : 1),
               valuation_residual(first.value, lift(BigRational(-1, 2))), certificate_text(first));
    LimitReport shifted = volkenborn_integral([&](long x) { return lift(x + 1); }, levels, tw);
    bool diff = true;
    for (std::size_t i = 0; i < shifted.values.size(); ++i) {
      diff = diff && agrees_relative(shifted.values[i] - first.values[i], lift(1), digits);
    }
    r.asserted("I(f_1) - I(f) = f'(0) at f(t) = t", diff);
  } else {
    // q I(f_1) - rho I(f) at level N equals rho(rho-q)(q^M f(M) - rho^M f(0))/(rho^M - q^M).
    LimitReport shifted = volkenborn_integral([&](long x) { return lift(x + 1); }, levels, tw);
    const PadicNumber rho = deep.rho();
    const PadicNumber q = deep.q();
    bool finite = true;
    std::vector<long> agreement;
    const PadicNumber limit = rho * (rho - q) / (padic_log(rho) - padic_log(q));
    for (std::size_t i = 0; i < shifted.values.size(); ++i) {
      const long m = checked_power(p, static_cast<long>(i) + 1);
      PadicNumber lhs = q * shifted.values[i] - rho * first.values[i];
      PadicNumber rhs = rho * (rho - q) * q.pow(m) * lift(m) / (rho.pow(m) - q.pow(m));
      finite = finite && agrees_relative(lhs, rhs, digits);
      agreement.push_back(lhs.agreement(limit));
    }
    bool growing = true;
    std::string text = "agreement with the limit";
    for (std::size_t i = 0; i < agreement.size(); ++i) {
      text += " " + std::to_string(agreement[i]);
      if (i > 0 && agreement[i] <= agreement[i - 1]) growing = false;
    }
    const std::string fin = "q I(f_1) - rho I(f) = rho(rho-q)(q^M f(M) - rho^M f(0))/(rho^M - q^M) at f(t) = t";
    if (js) {
      r.asserted(fin, finite);
      r.asserted("q I(f_1) - rho I(f) -> rho(rho-q)(f'(0)/(log rho - log q) - f(0)) at f(t) = t", growing, {}, text);
    } else {
      r.measured(fin, finite);
      r.measured("q I(f_1) - rho I(f) -> rho(rho-q)(f'(0)/(log rho - log q) - f(0)) at f(t) = t", growing, {}, text);
    }
  }

  // Carlitz-type Bernoulli values.
  const long clevels = std::min(levels, p <= 3 ? 6L : (p <= 5 ? 4L : 3L));
  for (long n : {0L, 1L, 2L}) {
    for (const BigRational& a : {BigRational(0), BigRational(1)}) {
      const PadicNumber x = lift(BigRational(p + 2));
      CarlitzResult c = carlitz_bernoulli(n, a, x, tw, clevels);
      bool same = c.direct.values.size() == c.binomial.values.size();
      for (std::size_t i = 0; same && i < c.direct.values.size(); ++i) {
        same = agrees_relative(c.direct.values[i], c.binomial.values[i], digits);
      }
      r.asserted("B_(" + std::to_string(n) + ";" + to_string(a) + ")(p+2): binomial expansion equals direct integral",
                 same);
    }
  }
  {
    CarlitzResult c0 = carlitz_bernoulli(0, 0, lift(BigRational(3)), tw, clevels);
    bool mass0 = true;
    for (const auto& v : c0.direct.values) mass0 = mass0 && agrees_relative(v, level0, digits);
    r.asserted("B_(0;0)(x) equals the total mass", mass0);
  }
  if (tw.classical_limit()) {
    CarlitzResult c1 = carlitz_bernoulli(1, 0, lift(0), tw, levels);
    r.asserted("B_(1;0)(0) = -1/2",
               c1.direct.converged && c1.direct.value.agrees_with(lift(BigRational(-1, 2)), c1.direct.certified_digits),
               valuation_residual(c1.direct.value, lift(BigRational(-1, 2))), certificate_text(c1.direct));
  }
  return r;
}

Report fermionic_suite(long prime, long precision, long levels) {
  Report r;
  const long work = precision + 2 * levels;
  auto lift = [&](const BigRational& v) { return PadicNumber::from_rational(v, prime, work); };
  LimitReport ones = fermionic_integral([&](long) { return lift(1); }, levels, prime, precision);
  bool unit = true;
  for (const auto& v : ones.values) unit = unit && v == lift(1);
  r.asserted("fermionic integral of 1 is 1 at every level", unit);

  auto square = [&](long x) { return lift(BigRational(BigInt(x) * x)); };
  auto shifted = [&](long x) { return lift(BigRational(BigInt(x + 1) * (x + 1))); };
  LimitReport f = fermionic_integral(square, levels, prime, precision);
  LimitReport f1 = fermionic_integral(shifted, levels, prime, precision);
  bool finite = true;
  std::vector<PadicNumber> sums;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const long m = checked_power(prime, static_cast<long>(i) + 1);
    PadicNumber s = f1.values[i] + f.values[i];
    finite = finite && s == lift(BigRational(BigInt(m) * m));
    sums.push_back(s);
  }
  r.asserted("I(f_1) + I(f) = f(0) + f(p^N) at every level for f(x) = x^2", finite);
  LimitReport combined;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    combined.levels.push_back(static_cast<long>(i) + 1);
    combined.values.push_back(sums[i]);
  }
  finish_limit(combined);
  r.asserted("I(f_1) + I(f) -> 2 f(0) = 0 for f(x) = x^2",
             combined.converged && combined.value.agrees_with(lift(0), 2 * levels), {}, certificate_text(combined));

  LimitReport lin = fermionic_integral([&](long x) { return lift(x); }, levels, prime, precision);
  r.asserted("fermionic integral of x tends to -1/2",
             lin.converged && lin.value.agrees_with(lift(BigRational(-1, 2)), lin.certified_digits) &&
                 lin.certified_digits >= levels - 1,
             valuation_residual(lin.value, lift(BigRational(-1, 2))), certificate_text(lin));
  return r;
}

}  // namespace rpq::padicfun
