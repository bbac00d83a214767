#include "rpq/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rpq/cli/json_io.hpp"
#include "rpq/cli/tables.hpp"
#include "rpq/gammabeta/gamma.hpp"
#include "rpq/padicfun/gamma.hpp"
#include "rpq/padicfun/volkenborn.hpp"
#include "rpq/quadrature/jackson.hpp"
#include "rpq/series/functions.hpp"
#include "rpq/spinzeta/matrix.hpp"
#include "rpq/spinzeta/zeta.hpp"
#include "rpq/suites.hpp"

namespace rpq::cli {

Format parse_format(const std::string& name) {
  if (name == "auto") return Format::automatic;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  throw UsageError("unknown format '" + name + "' (json, csv, plain)");
}

BigRational parse_scalar(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

deform::StructureFunction build_structure(const RunConfig& config) {
  if (!config.kernel_path.empty()) return load_kernel(config.kernel_path);
  try {
    return deform::StructureFunction(deform::parse_preset(config.preset));
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

deform::RationalParams build_params(const RunConfig& config) {
  deform::StructureFunction structure = build_structure(config);
  if (config.classical_limit) return deform::RationalParams::classical(std::move(structure), BigRational(1));
  const BigRational p = config.p ? parse_scalar(*config.p, "-p") : BigRational(4, 5);
  const BigRational q = config.q ? parse_scalar(*config.q, "-q") : BigRational(1, 2);
  std::optional<BigRational> xi1;
  std::optional<BigRational> xi2;
  if (config.xi1) xi1 = parse_scalar(*config.xi1, "--xi1");
  if (config.xi2) xi2 = parse_scalar(*config.xi2, "--xi2");
  return deform::RationalParams(std::move(structure), p, q, xi1, xi2);
}

namespace {

long config_prime(const RunConfig& config) {
  long p = 5;
  if (config.prime) {
    p = *config.prime;
  } else if (config.p) {
    BigRational v = parse_scalar(*config.p, "-p");
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw UsageError("-p as a prime must be an integer");
    p = v.get_num().get_si();
  }
  require_prime(p);
  return p;
}

}  // namespace

padicfun::TwistParams build_twist(const RunConfig& config) {
  const long p = config.prime ? *config.prime : 5;
  require_prime(p);
  deform::StructureFunction structure = build_structure(config);
  if (config.classical_limit) return padicfun::TwistParams::classical(p, config.precision, std::move(structure));
  const long step = p == 2 ? 4 : p;
  const BigRational rho = config.rho ? parse_scalar(*config.rho, "--rho") : BigRational(1 + step);
  const BigRational q = config.q ? parse_scalar(*config.q, "-q") : BigRational(1 + 2 * step);
  return padicfun::TwistParams(p, rho, q, config.precision, std::move(structure));
}

namespace {

Format resolve(Format f, Format fallback) { return f == Format::automatic ? fallback : f; }

std::string join(const std::vector<BigRational>& values, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? sep : "") + rpq::to_string(values[i]);
  return s;
}

Json rational_list(const std::vector<BigRational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(rational_json(v));
  return j;
}

series::Polynomial parse_polynomial(const std::string& text) {
  if (text.empty()) throw UsageError("--coeffs needs a comma-separated coefficient list c0,c1,...");
  std::vector<BigRational> c;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) c.push_back(parse_scalar(cell, "--coeffs"));
  return series::Polynomial::from_coefficients(c);
}

std::vector<BigRational> polynomial_coefficients(const series::Polynomial& f) {
  return f.is_zero() ? std::vector<BigRational>{0} : f.dense();
}

spinzeta::Mat2Padic parse_matrix(const std::string& text, long p, long n) {
  std::array<BigRational, 4> e;
  std::istringstream in(text);
  std::string cell;
  std::size_t k = 0;
  while (std::getline(in, cell, ',')) {
    if (k >= 4) throw UsageError("--matrix needs exactly four entries a,b,c,d");
    e[k++] = parse_scalar(cell, "--matrix");
  }
  if (k != 4) throw UsageError("--matrix needs exactly four entries a,b,c,d");
  return spinzeta::Mat2Padic::from_rationals(e, p, n);
}

Json matrix_json(const spinzeta::Mat2Padic& m) {
  Json j;
  j["a"] = padic_json(m.a());
  j["b"] = padic_json(m.b());
  j["c"] = padic_json(m.c());
  j["d"] = padic_json(m.d());
  return j;
}

std::string representative(const PadicNumber& x) { return x.is_zero() ? "0" : rpq::to_string(x.to_rational()); }

std::string matrix_plain(const spinzeta::Mat2Padic& m) {
  return "[[" + representative(m.a()) + ", " + representative(m.b()) + "], [" + representative(m.c()) + ", " +
         representative(m.d()) + "]]\n";
}

std::string limit_plain(const padicfun::LimitReport& limit) {
  std::string s = representative(limit.value) + "\n";
  s += "certified_digits " + std::to_string(limit.certified_digits) + (limit.converged ? "" : " (not converged)") + "\n";
  return s;
}

std::string high_plain(const gammabeta::GammaValue& v) {
  if (v.exact) return rpq::to_string(*v.exact) + "\n";
  return high_text(v.value) + " +- " + high_text(v.relative_tail_bound, 6) + " (relative)\n";
}

Json gamma_json(const gammabeta::GammaValue& v) {
  Json j;
  j["exact"] = v.exact ? rational_json(*v.exact) : Json(nullptr);
  j["value"] = high_text(v.value);
  j["truncation"] = v.truncation;
  j["relative_tail_bound"] = high_text(v.relative_tail_bound, 6);
  return j;
}

std::string plain_report(const std::vector<Report>& reports) {
  std::string s;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      const char* tag = c.asserted ? (c.passed ? "PASS" : "FAIL") : (c.passed ? "MEAS=" : "MEAS!");
      s += std::string(tag) + "  " + r.suite + ": " + c.name;
      if (!c.residual.empty()) s += "  [" + c.residual + "]";
      s += "\n";
    }
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Sends data to --out when given, else to the stream.
void emit(const RunConfig& config, std::ostream& out, const std::string& data) {
  if (config.out.empty()) {
    out << data;
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw IoError("cannot write '" + config.out + "'");
  file << data;
  file.close();
  if (!file) throw IoError("failed writing '" + config.out + "'");
}

void emit(const RunConfig& config, std::ostream& out, Format fallback, const Json& json, const std::string& plain) {
  Format f = resolve(config.format, fallback);
  if (f == Format::csv) throw UsageError("csv output is only available for tables");
  emit(config, out, f == Format::json ? json.dump(2) + "\n" : plain);
}

struct EvalOptions {
  std::string what;
  long n = 0;
  long m = 0;
  std::string x = "0";
  std::string y = "1";
  std::string z = "1";
  std::string coeffs;
  std::string a = "1";
  std::string b = "1";
  std::string family = "bernoulli";
  std::string function = "sin";
  std::string convention = "lower";
  std::optional<long> terms;
  std::string regime = "q_over_p";
  long truncation = gammabeta::kDefaultTruncation;
};

series::Convention parse_convention(const std::string& c) {
  if (c == "lower") return series::Convention::lower;
  if (c == "upper") return series::Convention::upper;
  throw UsageError("unknown convention '" + c + "' (lower, upper)");
}

int cmd_eval(const RunConfig& config, const EvalOptions& o, std::ostream& out) {
  const auto params = build_params(config);
  const long order = config.order.value_or(10);
  Json j;
  j["command"] = "eval " + o.what;
  j["preset"] = params.structure().is_custom() ? "custom" : params.structure().name();
  j["p"] = rational_json(params.p());
  j["q"] = rational_json(params.q());
  std::string plain;
  auto scalar = [&](const BigRational& v) {
    j["value"] = rational_json(v);
    plain = rpq::to_string(v) + "\n";
  };
  auto list = [&](const std::vector<BigRational>& v) {
    j["values"] = rational_list(v);
    plain = join(v, "\n") + "\n";
  };
  if (o.what == "number") {
    scalar(params.number(o.n));
  } else if (o.what == "factorial") {
    scalar(deform::rpq_factorial(params, o.n));
  } else if (o.what == "binomial") {
    scalar(deform::rpq_binomial(params, o.m, o.n));
  } else if (o.what == "derivative") {
    list(polynomial_coefficients(series::rpq_derivative(parse_polynomial(o.coeffs), params)));
  } else if (o.what == "antiderivative") {
    list(polynomial_coefficients(series::rpq_antiderivative(parse_polynomial(o.coeffs), params)));
  } else if (o.what == "integral") {
    scalar(quadrature::definite_integral_poly(parse_polynomial(o.coeffs), parse_scalar(o.a, "-a"),
                                              parse_scalar(o.b, "-b"), params));
  } else if (o.what == "jackson") {
    quadrature::Regime regime;
    try {
      regime = quadrature::parse_regime(o.regime);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
    quadrature::QuadratureSpec spec{params, o.terms, regime};
    scalar(quadrature::jackson_sum(parse_polynomial(o.coeffs), parse_scalar(o.a, "-a"), spec));
    j["terms"] = o.terms ? Json(*o.terms) : Json("closed form");
  } else if (o.what == "exp") {
    const auto conv = parse_convention(o.convention);
    auto s = conv == series::Convention::lower ? series::exp_lower(params, order) : series::exp_upper(params, order);
    list(s.coefficients());
  } else if (o.what == "trig") {
    const bool laurent = o.function == "csc" || o.function == "coth" || o.function == "CSC" || o.function == "COTH";
    auto s = series::trig_series(params, o.function, order, laurent);
    j["leading_exponent"] = s.leading_exponent();
    list(s.coefficients());
  } else if (o.what == "zigzag") {
    list(series::zigzag_numbers(params, order + 1));
  } else if (o.what == "family") {
    series::Family family;
    try {
      family = series::parse_family(o.family);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
    j["family"] = series::family_name(family);
    j["x"] = rational_json(parse_scalar(o.x, "-x"));
    list(series::generating_polynomials(params, family, parse_scalar(o.x, "-x"), order,
                                        parse_convention(o.convention)));
  } else if (o.what == "euler-star") {
    list(series::euler_star_numbers(params, order, parse_convention(o.convention)));
  } else if (o.what == "gamma") {
    auto v = gammabeta::gamma_rpq(parse_scalar(o.z, "-z"), params, o.truncation);
    j.update(gamma_json(v));
    plain = high_plain(v);
  } else if (o.what == "beta") {
    auto v = gammabeta::beta_rpq(parse_scalar(o.x, "-x"), parse_scalar(o.y, "-y"), params, o.truncation);
    j.update(gamma_json(v));
    plain = high_plain(v);
  } else {
    throw UsageError("unknown eval target '" + o.what + "'");
  }
  emit(config, out, Format::plain, j, plain);
  return kExitOk;
}

int cmd_gamma_like(const RunConfig& config, const EvalOptions& o, bool beta, std::ostream& out) {
  const auto params = build_params(config);
  Json j;
  j["command"] = beta ? "beta" : "gamma";
  gammabeta::GammaValue v;
  if (beta) {
    const BigRational x = parse_scalar(o.x, "-x");
    const BigRational y = parse_scalar(o.y, "-y");
    j["x"] = rational_json(x);
    j["y"] = rational_json(y);
    v = gammabeta::beta_rpq(x, y, params, o.truncation);
  } else {
    const BigRational z = parse_scalar(o.z, "-z");
    j["z"] = rational_json(z);
    v = gammabeta::gamma_rpq(z, params, o.truncation);
  }
  j.update(gamma_json(v));
  emit(config, out, Format::json, j, high_plain(v));
  return kExitOk;
}

int cmd_check(const RunConfig& config, std::vector<std::string> modules, bool all, std::ostream& out,
              std::ostream& err) {
  if (all) modules = suite_names();
  if (modules.empty()) {
    throw UsageError("nothing selected: give --module NAME (repeatable) or --all");
  }
  SuiteContext ctx;
  ctx.params = build_params(config);
  if (config.prime) {
    require_prime(*config.prime);
    ctx.prime = *config.prime;
  }
  ctx.precision = config.precision;
  std::vector<Report> reports;
  Json j;
  j["classical_limit"] = config.classical_limit;
  Json suites = Json::array();
  bool passed = true;
  const IdentityCheck* first = nullptr;
  std::string first_suite;
  for (const auto& m : modules) {
    reports.push_back(run_suite(m, ctx));
  }
  for (const auto& r : reports) {
    suites.push_back(report_json(r));
    if (!r.all_asserted_pass()) {
      passed = false;
      if (!first) {
        first = r.first_failure();
        first_suite = r.suite;
      }
    }
  }
  j["passed"] = passed;
  j["suites"] = suites;
  emit(config, out, Format::json, j, plain_report(reports));
  if (!passed) {
    err << "suite failure: " << first_suite << ": " << first->name;
    if (!first->residual.empty()) err << " (residual " << first->residual << ")";
    err << "\n";
    return kExitSuiteFailure;
  }
  return kExitOk;
}

struct TableOptions {
  std::string kind;
  long from = 0;
  std::optional<long> to;
  long m = 10;
  std::string x = "0";
  std::vector<long> primes = {2, 3, 5};
  long levels = padicfun::kDefaultLevels;
  std::string verify;
};

bool json_path(const RunConfig& config, const std::string& path) {
  if (config.format == Format::json) return true;
  if (config.format == Format::csv) return false;
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json";
}

int cmd_table(const RunConfig& config, const TableOptions& o, std::ostream& out, std::ostream& err) {
  const TableKind kind = parse_table_kind(o.kind);
  std::optional<deform::StructureFunction> custom;
  if (!config.kernel_path.empty()) custom = load_kernel(config.kernel_path);
  if (!o.verify.empty()) {
    const std::string text = read_file(o.verify);
    const Table t = json_path(config, o.verify) ? table_from_json(text) : table_from_csv(text);
    const auto bad = verify_table(kind, t, custom);
    Json j;
    j["rows"] = t.rows.size();
    j["mismatched_rows"] = bad;
    j["passed"] = bad.empty();
    std::string plain = std::to_string(t.rows.size() - bad.size()) + "/" + std::to_string(t.rows.size()) +
                        " rows reproduce\n";
    emit(config, out, Format::plain, j, plain);
    if (!bad.empty()) {
      err << "row " << bad.front() << " does not reproduce\n";
      return kExitSuiteFailure;
    }
    return kExitOk;
  }
  TableGrid grid;
  grid.from = o.from;
  grid.to = o.to ? *o.to : (kind == TableKind::zeta ? 6 : config.order.value_or(10));
  grid.m = o.m;
  grid.x = parse_scalar(o.x, "-x");
  grid.primes = o.primes;
  for (long p : grid.primes) require_prime(p);
  grid.levels = o.levels;
  std::optional<padicfun::TwistParams> twist;
  deform::RationalParams params = kind == TableKind::volkenborn || kind == TableKind::zeta
                                      ? deform::make_params(deform::Preset::jagannathan_srinivasa, BigRational(4, 5),
                                                            BigRational(1, 2))
                                      : build_params(config);
  if (kind == TableKind::volkenborn) twist = build_twist(config);
  const Table t = build_table(kind, grid, params, twist);
  if (config.format == Format::plain) throw UsageError("tables are written as csv or json");
  emit(config, out, json_path(config, config.out) ? table_to_json(t) : table_to_csv(t));
  return kExitOk;
}

struct SpinOptions {
  std::string action;
  std::string generator = "plus";
  std::string hbar = "1";
  std::string t = "1";
  std::string matrix;
};

int cmd_spin(const RunConfig& config, const SpinOptions& o, std::ostream& out) {
  const long p = config_prime(config);
  const long n = config.precision;
  Json j;
  j["command"] = "spin " + o.action;
  j["prime"] = p;
  spinzeta::Mat2Padic result = spinzeta::Mat2Padic::identity(p, n);
  std::string plain;
  if (o.action == "exp") {
    spinzeta::Mat2Padic s = result;
    if (!o.matrix.empty()) {
      s = parse_matrix(o.matrix, p, n);
    } else {
      const auto basis = spinzeta::spin_generators(parse_scalar(o.hbar, "--hbar"), p, n);
      if (o.generator == "plus") {
        s = basis.plus;
      } else if (o.generator == "minus") {
        s = basis.minus;
      } else if (o.generator == "z") {
        s = basis.z;
      } else {
        throw UsageError("unknown generator '" + o.generator + "' (minus, z, plus)");
      }
    }
    result = spinzeta::mat_exp(s, PadicNumber::from_rational(parse_scalar(o.t, "-t"), p, n));
    j["matrix"] = matrix_json(result);
    plain = matrix_plain(result);
  } else if (o.action == "log") {
    if (o.matrix.empty()) throw UsageError("spin log needs --matrix a,b,c,d");
    result = spinzeta::mat_log(parse_matrix(o.matrix, p, n));
    j["matrix"] = matrix_json(result);
    plain = matrix_plain(result);
  } else if (o.action == "level") {
    if (o.matrix.empty()) throw UsageError("spin level needs --matrix a,b,c,d");
    const long level = spinzeta::congruence_level(parse_matrix(o.matrix, p, n));
    j["level"] = level;
    plain = std::to_string(level) + "\n";
  } else {
    throw UsageError("unknown spin action '" + o.action + "' (exp, log, level)");
  }
  emit(config, out, Format::plain, j, plain);
  return kExitOk;
}

struct ZetaOptions {
  std::string action;
  long s = 2;
  long s_from = 2;
  long s_to = 6;
  std::vector<long> primes = {2, 3, 5};
  std::string group = "GO_odd";
  long l = 1;
};

int cmd_zeta(const RunConfig& config, const ZetaOptions& o, std::ostream& out) {
  Json j;
  j["command"] = "zeta " + o.action;
  if (o.action == "eval") {
    const long p = config_prime(config);
    const BigRational v = spinzeta::zeta_spin_half(p, o.s);
    j["p"] = p;
    j["s"] = o.s;
    j["value"] = rational_json(v);
    emit(config, out, Format::plain, j, rpq::to_string(v) + "\n");
  } else if (o.action == "function") {
    const long p = config_prime(config);
    const auto f = spinzeta::zeta_spin_half_rational(p);
    j["p"] = p;
    j["numerator"] = rational_list(f.numerator().dense());
    j["denominator"] = rational_list(f.denominator().dense());
    emit(config, out, Format::plain, j, f.to_string() + "\n");
  } else if (o.action == "table") {
    TableGrid grid;
    grid.from = o.s_from;
    grid.to = o.s_to;
    grid.primes = o.primes;
    for (long p : grid.primes) require_prime(p);
    const auto params = deform::make_params(deform::Preset::jagannathan_srinivasa, BigRational(4, 5),
                                            BigRational(1, 2));
    const Table t = build_table(TableKind::zeta, grid, params, std::nullopt);
    const Format f = resolve(config.format, Format::csv);
    if (f == Format::plain) throw UsageError("tables are written as csv or json");
    emit(config, out, f == Format::json ? table_to_json(t) : table_to_csv(t));
  } else if (o.action == "ghost") {
    spinzeta::GhostGroup g;
    try {
      g = spinzeta::parse_ghost_group(o.group);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
    const BigRational v = spinzeta::ghost_boundary(g, o.l);
    j["group"] = spinzeta::ghost_group_name(g);
    j["l"] = o.l;
    j["boundary"] = rational_json(v);
    emit(config, out, Format::plain, j, rpq::to_string(v) + "\n");
  } else {
    throw UsageError("unknown zeta action '" + o.action + "' (eval, function, table, ghost)");
  }
  return kExitOk;
}

struct PadicOptions {
  std::string integrand = "number";
  long n = 1;
  long levels = padicfun::kDefaultLevels;
  bool require = false;
  std::optional<std::string> x;
  std::string y = "1";
  std::string a = "0";
};

Json twist_json(const padicfun::TwistParams& tw) {
  Json j;
  j["prime"] = tw.prime();
  j["rho"] = rational_json(tw.rho_rational());
  j["q"] = rational_json(tw.q_rational());
  j["precision"] = tw.precision();
  j["preset"] = tw.structure().is_custom() ? "custom" : tw.structure().name();
  return j;
}

int cmd_volkenborn(const RunConfig& config, const PadicOptions& o, std::ostream& out) {
  const auto tw = build_twist(config);
  if (o.n < 0) throw UsageError("-n must be >= 0");
  padicfun::IntegerFunction f;
  if (o.integrand == "number") {
    f = [&tw, n = o.n](long t) { return tw.number(t).pow(n); };
  } else if (o.integrand == "power") {
    f = [&tw, n = o.n](long t) { return tw.lift(BigRational(t)).pow(n); };
  } else {
    throw UsageError("unknown integrand '" + o.integrand + "' (number for [t]^n, power for t^n)");
  }
  const auto limit = padicfun::volkenborn_integral(f, o.levels, tw, o.require);
  Json j;
  j["command"] = "volkenborn";
  j["twist"] = twist_json(tw);
  j["integrand"] = o.integrand == "number" ? "[t]^" + std::to_string(o.n) : "t^" + std::to_string(o.n);
  j["certificate"] = limit_json(limit);
  emit(config, out, Format::json, j, limit_plain(limit));
  return kExitOk;
}

long integer_arg(const std::string& text, const std::string& what) {
  BigRational v = parse_scalar(text, what);
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw UsageError(what + " must be an integer");
  return v.get_num().get_si();
}

int cmd_pgamma(const RunConfig& config, const PadicOptions& o, std::ostream& out) {
  const auto tw = build_twist(config);
  Json j;
  j["command"] = "pgamma";
  j["twist"] = twist_json(tw);
  if (o.x) {
    const PadicNumber x = tw.lift(parse_scalar(*o.x, "-x"));
    const auto limit = padicfun::padic_gamma_limit(x, o.levels, tw);
    j["x"] = *o.x;
    j["certificate"] = limit_json(limit);
    emit(config, out, Format::json, j, limit_plain(limit));
  } else {
    const PadicNumber v = padicfun::padic_gamma_rpq(o.n, tw);
    j["n"] = o.n;
    j["value"] = padic_json(v);
    emit(config, out, Format::json, j, representative(v) + "\n");
  }
  return kExitOk;
}

int cmd_pbeta(const RunConfig& config, const PadicOptions& o, std::ostream& out) {
  const auto tw = build_twist(config);
  const long x = integer_arg(o.x.value_or("1"), "-x");
  const long y = integer_arg(o.y, "-y");
  const PadicNumber v = padicfun::padic_beta_rpq(x, y, tw);
  Json j;
  j["command"] = "pbeta";
  j["twist"] = twist_json(tw);
  j["x"] = x;
  j["y"] = y;
  j["value"] = padic_json(v);
  emit(config, out, Format::json, j, representative(v) + "\n");
  return kExitOk;
}

int cmd_carlitz(const RunConfig& config, const PadicOptions& o, std::ostream& out) {
  const auto tw = build_twist(config);
  if (o.n < 0) throw UsageError("-n must be >= 0");
  const PadicNumber x = tw.lift(parse_scalar(o.x.value_or("0"), "-x"));
  const auto result = padicfun::carlitz_bernoulli(o.n, parse_scalar(o.a, "-a"), x, tw, o.levels);
  Json j;
  j["command"] = "carlitz";
  j["twist"] = twist_json(tw);
  j["n"] = o.n;
  j["a"] = o.a;
  j["x"] = o.x.value_or("0");
  j["direct"] = limit_json(result.direct);
  j["binomial"] = limit_json(result.binomial);
  j["routes_agree"] = result.direct.value == result.binomial.value;
  emit(config, out, Format::json, j, limit_plain(result.direct));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact R(p,q)-deformed calculus and its p-adic counterparts", "rpqcalc"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "auto";
  std::optional<std::string> p, q, xi1, xi2, rho;
  std::optional<long> prime, order;
  auto* preset_opt = app.add_option("--preset", config.preset, "Structure function preset (js, heine, quesne, bm, cj, hn)");
  auto* kernel_opt = app.add_option("--kernel", config.kernel_path, "Custom kernel JSON file");
  preset_opt->excludes(kernel_opt);
  app.add_option("-p", p, "Deformation parameter p (also the prime for spin/zeta)");
  app.add_option("-q", q, "Deformation parameter q, or the p-adic twist q");
  app.add_option("--xi1", xi1, "First twist base");
  app.add_option("--xi2", xi2, "Second twist base");
  app.add_option("--rho", rho, "p-adic twist rho");
  app.add_option("--prime", prime, "Prime for p-adic commands");
  app.add_option("--precision", config.precision, "p-adic precision in digits")->check(CLI::PositiveNumber);
  app.add_option("--order", order, "Series order, table size or truncation");
  app.add_flag("--classical-limit", config.classical_limit, "Use p = q = 1 (or rho = q = 1)");
  app.add_option("--format", format, "Output format: auto, json, csv, plain")
      ->check(CLI::IsMember({"auto", "json", "csv", "plain"}));
  app.add_option("--out", config.out, "Write data to this file instead of stdout");

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one quantity exactly");
  eval->add_option("what", ev.what,
                   "number factorial binomial derivative antiderivative integral jackson exp trig zigzag family "
                   "euler-star gamma beta")
      ->required();
  eval->add_option("-n", ev.n, "Index n");
  eval->add_option("-m", ev.m, "Index m (binomial)");
  eval->add_option("-x", ev.x, "Argument x");
  eval->add_option("-y", ev.y, "Argument y (beta)");
  eval->add_option("-z", ev.z, "Argument z (gamma)");
  eval->add_option("--coeffs", ev.coeffs, "Polynomial coefficients c0,c1,...");
  eval->add_option("-a", ev.a, "Lower end or Jackson endpoint");
  eval->add_option("-b", ev.b, "Upper end");
  eval->add_option("--family", ev.family, "bernoulli, euler or genocchi");
  eval->add_option("--function", ev.function, "Trigonometric function name");
  eval->add_option("--convention", ev.convention, "lower (e_R) or upper (E_R)");
  eval->add_option("--terms", ev.terms, "Jackson terms (default: closed form)");
  eval->add_option("--regime", ev.regime, "q_over_p or p_over_q");
  eval->add_option("--truncation", ev.truncation, "Gamma product truncation");

  EvalOptions gm;
  auto* gamma = app.add_subcommand("gamma", "Deformed gamma function with truncation and tail bound");
  gamma->add_option("-z", gm.z, "Argument")->required();
  gamma->add_option("--truncation", gm.truncation, "Product truncation");
  EvalOptions bt;
  auto* beta = app.add_subcommand("beta", "Deformed beta function with truncation and tail bound");
  beta->add_option("-x", bt.x, "First argument")->required();
  beta->add_option("-y", bt.y, "Second argument")->required();
  beta->add_option("--truncation", bt.truncation, "Product truncation");

  std::vector<std::string> modules;
  bool all_modules = false;
  auto* check = app.add_subcommand("check", "Run identity suites");
  check->add_option("--module", modules, "Suite name (repeatable)")->check(CLI::IsMember(suite_names()));
  check->add_flag("--all", all_modules, "Run every suite");

  TableOptions to;
  auto* table = app.add_subcommand("table", "Emit or verify a table");
  table->add_option("kind", to.kind, "number factorial binomial bernoulli euler genocchi zigzag volkenborn zeta")
      ->required();
  table->add_option("--from", to.from, "First index");
  table->add_option("--to", to.to, "Last index");
  table->add_option("-m", to.m, "Binomial upper index");
  table->add_option("-x", to.x, "Family evaluation point");
  table->add_option("--primes", to.primes, "Zeta primes")->delimiter(',');
  table->add_option("--levels", to.levels, "Volkenborn levels");
  table->add_option("--verify", to.verify, "Re-evaluate every row of this table file");

  SpinOptions so;
  auto* spin = app.add_subcommand("spin", "SL(2, Z_p) spin generators: exp, log, level");
  spin->add_option("action", so.action, "exp, log or level")->required();
  spin->add_option("--generator", so.generator, "minus, z or plus");
  spin->add_option("--hbar", so.hbar, "Generator scale");
  spin->add_option("-t", so.t, "Exponent scalar");
  spin->add_option("--matrix", so.matrix, "Entries a,b,c,d");

  ZetaOptions zo;
  auto* zeta = app.add_subcommand("zeta", "Spin(1/2) subalgebra zeta function");
  zeta->add_option("action", zo.action, "eval, function, table or ghost")->required();
  zeta->add_option("-s", zo.s, "Integer s");
  zeta->add_option("--s-from", zo.s_from, "First s of a table");
  zeta->add_option("--s-to", zo.s_to, "Last s of a table");
  zeta->add_option("--primes", zo.primes, "Primes of a table")->delimiter(',');
  zeta->add_option("--group", zo.group, "GO_odd, GSp or GO_even_plus");
  zeta->add_option("-l", zo.l, "Rank l >= 1");

  PadicOptions vo;
  auto* volk = app.add_subcommand("volkenborn", "Volkenborn integral with its convergence certificate");
  volk->add_option("--integrand", vo.integrand, "number ([t]^n) or power (t^n)");
  volk->add_option("-n", vo.n, "Exponent");
  volk->add_option("--levels", vo.levels, "Partition levels");
  volk->add_flag("--require-convergence", vo.require, "Fail unless the certificate converges");

  PadicOptions go;
  auto* pgamma = app.add_subcommand("pgamma", "p-adic deformed gamma function");
  pgamma->add_option("-n", go.n, "Integer argument");
  pgamma->add_option("-x", go.x, "Argument in Z_p (limit over digit truncations)");
  pgamma->add_option("--levels", go.levels, "Digit truncation levels");

  PadicOptions bo;
  auto* pbeta = app.add_subcommand("pbeta", "p-adic deformed beta function at integers");
  pbeta->add_option("-x", bo.x, "First integer argument")->required();
  pbeta->add_option("-y", bo.y, "Second integer argument")->required();

  PadicOptions co;
  auto* carlitz = app.add_subcommand("carlitz", "Carlitz-type Bernoulli value by two routes");
  carlitz->add_option("-n", co.n, "Index n");
  carlitz->add_option("-a", co.a, "Weight exponent a");
  carlitz->add_option("-x", co.x, "Shift x in Z_p");
  carlitz->add_option("--levels", co.levels, "Partition levels");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  config.p = p;
  config.q = q;
  config.xi1 = xi1;
  config.xi2 = xi2;
  config.rho = rho;
  config.prime = prime;
  config.order = order;

  try {
    config.format = parse_format(format);
    if (!config.kernel_path.empty()) config.preset = "custom";
    if (eval->parsed()) return cmd_eval(config, ev, out);
    if (gamma->parsed()) return cmd_gamma_like(config, gm, false, out);
    if (beta->parsed()) return cmd_gamma_like(config, bt, true, out);
    if (check->parsed()) return cmd_check(config, modules, all_modules, out, err);
    if (table->parsed()) return cmd_table(config, to, out, err);
    if (spin->parsed()) return cmd_spin(config, so, out);
    if (zeta->parsed()) return cmd_zeta(config, zo, out);
    if (volk->parsed()) return cmd_volkenborn(config, vo, out);
    if (pgamma->parsed()) return cmd_pgamma(config, go, out);
    if (pbeta->parsed()) return cmd_pbeta(config, bo, out);
    if (carlitz->parsed()) return cmd_carlitz(config, co, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  }
  err << "error: no subcommand\n";
  return kExitParseError;
}

}  // namespace rpq::cli
