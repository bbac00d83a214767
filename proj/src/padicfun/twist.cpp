#include "rpq/padicfun/twist.hpp"

#include <algorithm>

namespace rpq::padicfun {

namespace {

long valuation_of(const BigRational& x, long p) {
  if (x == 0) return PadicNumber::kExact;
  return PadicNumber::from_rational(x, p, 4).valuation();
}

PadicParams make_binding(const deform::StructureFunction& structure, const BigRational& rho, const BigRational& q,
                         long prime, long digits) {
  PadicNumber r = PadicNumber::from_rational(rho, prime, digits);
  PadicNumber s = PadicNumber::from_rational(q, prime, digits);
  if (rho == 1 && q == 1) return PadicParams::classical(structure, r);
  return PadicParams(structure, r, s);
}

}  // namespace

TwistParams::TwistParams(long prime, BigRational rho, BigRational q, long precision,
                         deform::StructureFunction structure)
    : prime_(prime),
      rho_(std::move(rho)),
      q_(std::move(q)),
      precision_(precision),
      structure_(std::move(structure)),
      params_(make_binding(structure_, rho_, q_, prime, precision + kGuardDigits)) {
  if (precision_ < 1) throw InvalidParameter("p-adic precision must be at least 1");
  if (valuation_of(BigRational(rho_ - 1), prime_) < 1) {
    throw InvalidParameter("rho must satisfy |rho - 1|_p < 1, got rho = " + to_string(rho_));
  }
  if (valuation_of(BigRational(q_ - 1), prime_) < 1) {
    throw InvalidParameter("q must satisfy |q - 1|_p < 1, got q = " + to_string(q_));
  }
  if (rho_ == q_ && !classical_limit()) {
    throw InvalidParameter("rho and q must differ outside the classical limit rho = q = 1");
  }
}

TwistParams TwistParams::classical(long prime, long precision, deform::StructureFunction structure) {
  return TwistParams(prime, 1, 1, precision, std::move(structure));
}

PadicParams TwistParams::binding(long digits) const { return make_binding(structure_, rho_, q_, prime_, digits); }

PadicNumber TwistParams::number_at(const PadicNumber& x) const {
  if (classical_limit()) return x.with_precision(working_precision());
  require_volkenborn();
  auto sp = params_.shift_pair();
  if (!sp) throw InvalidParameter("[x] for p-adic x needs a preset structure function");
  PadicNumber a = padic_power(sp->alpha, x);
  PadicNumber b = padic_power(sp->beta, x);
  return sp->scale * (a - b) / (sp->alpha - sp->beta);
}

TwistParams TwistParams::powered(long k) const {
  return TwistParams(prime_, ipow(rho_, k), ipow(q_, k), precision_, structure_);
}

TwistParams TwistParams::with_precision(long digits) const {
  return TwistParams(prime_, rho_, q_, digits, structure_);
}

bool TwistParams::volkenborn_ready() const {
  const long need = prime_ == 2 ? 2 : 1;
  return valuation_of(BigRational(rho_ - 1), prime_) >= need && valuation_of(BigRational(q_ - 1), prime_) >= need;
}

void TwistParams::require_volkenborn() const {
  if (!volkenborn_ready()) {
    throw ConvergenceDomainError("the twist needs |rho - 1|_p, |q - 1|_p < p^(-1/(p-1)) (v >= " +
                                 std::string(prime_ == 2 ? "2" : "1") + "), got rho = " + to_string(rho_) +
                                 ", q = " + to_string(q_));
  }
}

std::string TwistParams::describe() const {
  return structure_.name() + " p=" + std::to_string(prime_) + " rho=" + to_string(rho_) + " q=" + to_string(q_) +
         " N=" + std::to_string(precision_);
}

void finish_limit(LimitReport& report) {
  report.difference_valuations.clear();
  std::vector<bool> saturated;
  for (std::size_t i = 1; i < report.values.size(); ++i) {
    const PadicNumber& a = report.values[i];
    const PadicNumber& b = report.values[i - 1];
    const long d = a.agreement(b);
    report.difference_valuations.push_back(d);
    saturated.push_back(d >= std::min(a.absolute_precision(), b.absolute_precision()));
  }
  const auto& d = report.difference_valuations;
  bool ok = !d.empty();
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] <= d[i - 1] && !saturated[i]) ok = false;
  }
  report.converged = ok;
  if (!report.values.empty()) report.value = report.values.back();
  report.certified_digits = d.empty() ? 0 : std::min(d.back(), report.value.absolute_precision());
}

bool agrees_relative(const PadicNumber& a, const PadicNumber& b, long digits) {
  const long base = std::min(a.valuation(), b.valuation());
  if (base >= PadicNumber::kExact) return true;
  return a.agreement(b) >= base + digits;
}

std::string valuation_residual(const PadicNumber& a, const PadicNumber& b) {
  return "v>=" + std::to_string(a.agreement(b));
}

}  // namespace rpq::padicfun
