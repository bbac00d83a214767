// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rpq/arith/errors.hpp"
#include "rpq/cli/app.hpp"
#include "rpq/deform/params.hpp"
#include "rpq/gammabeta/gamma.hpp"
#include "rpq/padicfun/gamma.hpp"
#include "rpq/padicfun/volkenborn.hpp"
#include "rpq/quadrature/jackson.hpp"
#include "rpq/series/functions.hpp"
#include "rpq/spinzeta/matrix.hpp"
#include "rpq/spinzeta/zeta.hpp"
#include "rpq/suites.hpp"

using namespace rpq;
using deform::Preset;
using deform::RationalParams;
using series::Polynomial;

namespace {

BigRational rat(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

int report(int k, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_s) o.require(false, "runtime over " + std::to_string(limit_s) + " s");
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " [" << secs << " s]";
  if (!o.note.empty()) std::cout << " -- " << o.note;
  std::cout << "\n";
  return o.pass ? 0 : 1;
}

RationalParams sample(Preset preset) { return deform::make_params(preset, rat(4, 5), rat(1, 2)); }

// The difference quotient of each preset at z = 1.
BigRational closed_form(Preset preset, const BigRational& p, const BigRational& q, long n) {
  switch (preset) {
    case Preset::heine: return (1 - ipow(q, n)) / (1 - q);
    case Preset::quesne: return (1 - ipow(q, -n)) / (q - 1);
    case Preset::biedenharn_macfarlane: return (ipow(q, n) - ipow(q, -n)) / (q - 1 / q);
    case Preset::jagannathan_srinivasa: return (ipow(p, n) - ipow(q, n)) / (p - q);
    case Preset::chakrabarty_jagannathan: return (ipow(p, -n) - ipow(q, n)) / (1 / p - q);
    case Preset::hounkonnou_ngompe: return (ipow(p, n) - ipow(q, -n)) / (q - 1 / p);
    case Preset::custom: break;
  }
  return 0;
}

void criterion1(Outcome& o) {
  const BigRational p = rat(4, 5), q = rat(1, 2);
  for (Preset preset : deform::all_presets()) {
    auto params = sample(preset);
    const std::string name = deform::preset_name(preset);
    std::vector<BigRational> fact{1};
    for (long n = 1; n <= 64; ++n) fact.push_back(BigRational(fact.back() * closed_form(preset, p, q, n)));
    for (long n = 0; n <= 64; ++n) {
      o.require(deform::rpq_number(params, n) == closed_form(preset, p, q, n), name + " number n=" + std::to_string(n));
      o.require(deform::rpq_factorial(params, n) == fact[static_cast<std::size_t>(n)], name + " factorial");
      if (n > 0) {
        o.require(deform::rpq_factorial(params, n) == deform::rpq_number(params, n) * deform::rpq_factorial(params, n - 1),
                  name + " factorial recursion");
      }
    }
    for (long m = 0; m <= 64; m += 3) {
      for (long k = 0; k <= m; ++k) {
        BigRational b = deform::rpq_binomial(params, m, k);
        o.require(b == fact[static_cast<std::size_t>(m)] /
                           (fact[static_cast<std::size_t>(k)] * fact[static_cast<std::size_t>(m - k)]),
                  name + " binomial");
        o.require(b == deform::rpq_binomial(params, m, m - k), name + " binomial symmetry");
      }
    }
  }
}

void criterion2(Outcome& o) {
  for (Preset preset : deform::all_presets()) {
    auto params = sample(preset);
    for (long n = 0; n <= 12; ++n) {
      Polynomial d = series::rpq_derivative(Polynomial::monomial(n), params);
      o.require(d == (n == 0 ? Polynomial() : Polynomial::monomial(n - 1, deform::rpq_number(params, n))),
                "derivative of z^" + std::to_string(n));
    }
    std::vector<BigRational> c;
    for (long k = 0; k <= 12; ++k) c.push_back(rat((k * 7) % 11 - 5, k + 1));
    Polynomial f = Polynomial::from_coefficients(c);
    const BigRational a = rat(-2, 3), b = rat(5, 4);
    o.require(quadrature::definite_integral_poly(series::rpq_derivative(f, params), a, b, params) == f(b) - f(a),
              "fundamental theorem");
    o.require(series::rpq_derivative(series::rpq_antiderivative(f, params), params) == f, "derivative of antiderivative");
  }
  const BigRational p = rat(4, 5), q = rat(1, 2), a = rat(3, 2);
  auto params = deform::make_params(Preset::jagannathan_srinivasa, p, q);
  const BigRational tol(1, BigInt("1" + std::string(30, '0')));
  for (long n = 0; n <= 8; ++n) {
    const BigRational expected = BigRational(ipow(a, n + 1) / deform::rpq_number(params, n + 1));
    quadrature::QuadratureSpec exact{params, std::nullopt};
    o.require(quadrature::jackson_sum(Polynomial::monomial(n), a, exact) == expected, "Jackson closed form");
    quadrature::Function fn = [n](const BigRational& x) { return ipow(x, n); };
    BigRational t = quadrature::jackson_sum(fn, a, quadrature::QuadratureSpec{params, 200});
    BigRational rel = BigRational((t - expected) / expected);
    if (rel < 0) rel = -rel;
    o.require(rel < tol, "Jackson 200-term truncation n=" + std::to_string(n));
  }
}

void criterion3(Outcome& o) {
  using gammabeta::gamma_rpq;
  auto params = deform::make_params(Preset::jagannathan_srinivasa, rat(4, 5), rat(1, 2));
  for (long n = 0; n <= 32; ++n) {
    auto g = gamma_rpq(n + 1, params);
    o.require(g.exact && *g.exact == deform::rpq_factorial(params, n), "Gamma(n+1) n=" + std::to_string(n));
  }
  const HighFloat rounding("1e-80");
  for (BigRational z : {rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4), rat(3, 4), rat(1, 5), rat(7, 5), rat(5, 2), rat(-1, 2),
                        rat(13, 4)}) {
    auto g0 = gamma_rpq(z, params);
    auto g1 = gamma_rpq(BigRational(z + 1), params);
    HighFloat gap = abs(g1.value / (gammabeta::deformed_number_real(z, params) * g0.value) - 1);
    o.require(gap <= g0.relative_tail_bound + g1.relative_tail_bound + rounding, "recurrence at z=" + to_string(z));
  }
  auto B = [&](long x, long y) -> BigRational { return *gammabeta::beta_rpq(x, y, params).exact; };
  auto num = [&](long n) -> BigRational { return deform::rpq_number(params, n); };
  for (long x = 1; x <= 6; ++x) {
    for (long y = 1; y <= 6; ++y) {
      const BigRational bxy = B(x, y);
      o.require(B(x, y + 1) == num(y) / num(x + y) * bxy, "beta (i)");
      o.require(B(x + 1, y) == num(x) / num(x + y) * bxy, "beta (ii)");
      o.require(B(x + 1, y) == num(x) / num(y) * B(x, y + 1), "beta (iii)");
      o.require(B(x + 1, y + 1) == num(x) * num(y) / (num(x + y + 1) * num(x + y)) * bxy, "beta (vi)");
    }
  }
}

long alternating_permutations(long n) {
  if (n <= 1) return 1;
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = (i % 2 == 0) ? perm[i] > perm[i + 1] : perm[i] < perm[i + 1];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

void criterion4(Outcome& o) {
  auto classical = RationalParams::classical(deform::StructureFunction(Preset::jagannathan_srinivasa), BigRational(1));
  // Invert (e^z - 1)/z term by term.
  std::vector<BigRational> d, inv;
  BigRational fact = 1;
  for (long n = 0; n <= 8; ++n) {
    fact *= (n + 1);
    d.push_back(BigRational(1 / fact));
  }
  fact = 1;
  const std::vector<BigRational> expected{1, rat(-1, 2), rat(1, 6), 0, rat(-1, 30), 0, rat(1, 42), 0, rat(-1, 30)};
  auto bern = series::generating_polynomials(classical, series::Family::bernoulli, 0, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    BigRational acc = n == 0 ? BigRational(1) : BigRational(0);
    for (std::size_t k = 1; k <= n; ++k) acc -= d[k] * inv[n - k];
    inv.push_back(acc);
    if (n > 0) fact *= static_cast<long>(n);
    o.require(BigRational(inv[n] * fact) == expected[n], "Bernoulli oracle B" + std::to_string(n));
    o.require(bern[n] == expected[n], "Bernoulli B" + std::to_string(n));
  }
  const std::vector<long> zig{1, 1, 1, 2, 5, 16, 61, 272};
  auto a = series::zigzag_numbers(classical, 8);
  for (std::size_t n = 0; n < 8; ++n) {
    o.require(alternating_permutations(static_cast<long>(n)) == zig[n], "permutation count");
    o.require(a[n] == zig[n], "zigzag A" + std::to_string(n));
  }
  for (Preset preset : deform::all_presets()) {
    auto params = sample(preset);
    auto g = series::generating_polynomials(params, series::Family::genocchi, rat(1, 3), 17);
    auto e = series::generating_polynomials(params, series::Family::euler, rat(1, 3), 16);
    for (long n = 0; n <= 16; ++n) {
      o.require(g[static_cast<std::size_t>(n + 1)] == deform::rpq_number(params, n + 1) * e[static_cast<std::size_t>(n)],
                "Genocchi/Euler link");
    }
  }
}

void criterion5(Outcome& o) {
  using namespace padicfun;
  for (long p : {3L, 5L, 7L}) {
    TwistParams tw(p, 1 + p, 1 + 2 * p, 16);
    const std::string at = " p=" + std::to_string(p);
    o.require(padic_gamma_rpq(0, tw) == tw.lift(1), "Gamma(0)" + at);
    o.require(padic_gamma_rpq(1, tw) == tw.lift(-1), "Gamma(1)" + at);
    for (long x = -5; x < 15; ++x) o.require(padic_gamma_rpq(x, tw).norm() == 1, "unit norm" + at);
    for (long z = -p; z <= 30; ++z) {
      o.require(padic_gamma_rpq(z + 1, tw) == delta_factor(z, tw) * padic_gamma_rpq(z, tw), "recurrence" + at);
    }
    for (long n = 1; n <= 30; ++n) {
      Report r = factorial_decomposition_check(n, tw);
      const IdentityCheck* bad = r.first_failure();
      o.require(bad == nullptr, bad ? bad->name + at : std::string());
    }
    for (long level = 1; level <= 3; ++level) {
      const long pn = static_cast<long>(ipow(p, static_cast<unsigned long>(level)).get_si());
      for (long a : {0L, 1L, pn - 1}) {
        PadicNumber sum = PadicNumber::zero(p, tw.working_precision());
        for (long b = 0; b < p; ++b) sum += volkenborn_measure(a + b * pn, level + 1, tw);
        o.require(sum == volkenborn_measure(a, level, tw), "distribution relation" + at);
      }
    }
    auto classical = TwistParams::classical(p, 16);
    const long wp = classical.working_precision();
    LimitReport b0 = volkenborn_integral([&](long) { return PadicNumber::from_integer(1, p, wp); }, 6, classical);
    o.require(b0.value == PadicNumber::from_integer(1, p, 16), "B0" + at);
    LimitReport b1 = volkenborn_integral([&](long x) { return PadicNumber::from_integer(x, p, wp); }, 6, classical);
    o.require(b1.levels.size() == 6, "six levels" + at);
    for (std::size_t i = 1; i < b1.difference_valuations.size(); ++i) {
      o.require(b1.difference_valuations[i] > b1.difference_valuations[i - 1], "strictly increasing differences" + at);
    }
    o.require(b1.value.agrees_with(PadicNumber::from_rational(rat(-1, 2), p, 16), b1.certified_digits) &&
                  b1.certified_digits >= 4,
              "B1" + at);
  }
}

void criterion6(Outcome& o) {
  using namespace spinzeta;
  for (long p : {3L, 5L, 7L}) {
    const long n = 12;
    const BigRational h = p;
    SpinBasis s = spin_generators(h, p, n);
    const PadicNumber hp = PadicNumber::from_rational(h, p, n);
    o.require(commutator(s.plus, s.minus) == s.z.scaled(hp + hp), "[S+, S-]");
    o.require(commutator(s.z, s.plus) == s.plus.scaled(hp), "[Sz, S+]");
    o.require(commutator(s.z, s.minus) == s.minus.scaled(-hp), "[Sz, S-]");
    SpinBasis unit = spin_generators(1, p, n);
    const PadicNumber t = PadicNumber::from_integer(p, p, n);
    for (long k = 1; k <= 4; ++k) {
      Mat2Padic x = spin_combination(unit, rat(k, 1), rat(1 - k, 1), rat(2 * k + 1, 1));
      Mat2Padic g = mat_exp(x, t);
      o.require(g.det() == PadicNumber::from_integer(1, p, n), "det exp = 1");
      o.require(mat_log(g).agreement(x.scaled(t)) >= n, "exp/log round trip");
    }
  }
  auto factor = [](long p, long a, long m, long s) -> BigRational {
    return BigRational(1 / (1 - ipow(BigRational(p), a - m * s)));
  };
  int pairs = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long s = 2; s <= 6; ++s) {
      BigRational oracle = factor(p, 0, 1, s) * factor(p, 1, 1, s) * factor(p, 1, 2, s) * factor(p, 2, 2, s) / factor(p, 1, 3, s);
      o.require(zeta_spin_half(p, s) == oracle, "zeta at p=" + std::to_string(p) + ", s=" + std::to_string(s));
      ++pairs;
    }
  }
  o.require(pairs == 20, "20 pairs");
  for (long l = 1; l <= 5; ++l) {
    o.require(ghost_boundary(GhostGroup::go_odd, l) == l * l - 1, "GO_odd boundary");
    o.require(2 * ghost_boundary(GhostGroup::gsp, l) == l * (l + 1) - 4, "GSp boundary");
    o.require(2 * ghost_boundary(GhostGroup::go_even_plus, l) == l * (l - 1) - 4, "GO_even_plus boundary");
  }
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run_cli(args, out, err);
}

void criterion7(Outcome& o) {
  o.require(cli({"check", "--all"}) == 0, "check --all");
  for (const auto& name : suite_names()) o.require(cli({"check", "--module", name}) == 0, "check " + name);
  auto dir = std::filesystem::temp_directory_path() / "rpq_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> grids{
      {"table", "factorial", "--to", "20", "--preset", "cj"},
      {"table", "genocchi", "--to", "10", "-x", "1/3"},
      {"table", "zeta", "--from", "2", "--to", "6", "--primes", "2,3,5,7"},
  };
  int i = 0;
  for (const auto& grid : grids) {
    auto path = (dir / ("grid" + std::to_string(i++) + ".csv")).string();
    auto args = grid;
    args.insert(args.end(), {"--out", path});
    o.require(cli(args) == 0, "emit " + grid[1]);
    o.require(cli({"table", grid[1], "--verify", path}) == 0, "round trip " + grid[1]);
  }
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "deformation core against closed forms", 1, criterion1);
  failures += report(2, "calculus and Jackson sums", 5, criterion2);
  failures += report(3, "gamma and beta", 10, criterion3);
  failures += report(4, "polynomial families", 5, criterion4);
  failures += report(5, "p-adic gamma and Volkenborn", 60, criterion5);
  failures += report(6, "spin matrices and zeta", 5, criterion6);
  failures += report(7, "CLI checks and table round trips", 30, criterion7);
  return failures == 0 ? 0 : 1;
}
