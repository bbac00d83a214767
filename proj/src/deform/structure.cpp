#include "rpq/deform/structure.hpp"

#include "rpq/deform/params.hpp"

namespace rpq::deform {

std::string preset_name(Preset preset) {
  switch (preset) {
    case Preset::heine:
      return "heine";
    case Preset::quesne:
      return "quesne";
    case Preset::biedenharn_macfarlane:
      return "biedenharn_macfarlane";
    case Preset::jagannathan_srinivasa:
      return "jagannathan_srinivasa";
    case Preset::chakrabarty_jagannathan:
      return "chakrabarty_jagannathan";
    case Preset::hounkonnou_ngompe:
      return "hounkonnou_ngompe";
    case Preset::custom:
      return "custom";
  }
  return "custom";
}

Preset parse_preset(std::string_view name) {
  if (name == "js") return Preset::jagannathan_srinivasa;
  if (name == "bm") return Preset::biedenharn_macfarlane;
  if (name == "cj") return Preset::chakrabarty_jagannathan;
  if (name == "hn") return Preset::hounkonnou_ngompe;
  for (Preset p : all_presets()) {
    if (preset_name(p) == name) return p;
  }
  throw InvalidParameter("unknown preset '" + std::string(name) + "'");
}

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = {
      Preset::heine,
      Preset::quesne,
      Preset::biedenharn_macfarlane,
      Preset::jagannathan_srinivasa,
      Preset::chakrabarty_jagannathan,
      Preset::hounkonnou_ngompe,
  };
  return presets;
}

LaurentPoly2::LaurentPoly2(const std::vector<std::tuple<long, long, BigRational>>& terms) {
  for (const auto& [s, t, c] : terms) add_term(s, t, c);
}

void LaurentPoly2::add_term(long s, long t, const BigRational& c) {
  auto key = std::make_pair(s, t);
  BigRational sum = terms_[key] + c;
  if (sum == 0) {
    terms_.erase(key);
  } else {
    terms_[key] = sum;
  }
}

BigRational LaurentPoly2::value_at_one() const {
  BigRational s = 0;
  for (const auto& [exps, c] : terms_) s += c;
  return s;
}

StructureFunction::StructureFunction(Preset preset) : kind_(preset) {
  if (preset == Preset::custom) throw InvalidParameter("use StructureFunction::custom for custom kernels");
}

StructureFunction StructureFunction::custom(LaurentPoly2 numerator, LaurentPoly2 denominator) {
  if (numerator.value_at_one() != 0) throw InvalidParameter("custom kernel must satisfy R(1,1) = 0: N(1,1) != 0");
  if (denominator.value_at_one() == 0) throw InvalidParameter("custom kernel has D(1,1) = 0");
  StructureFunction r;
  r.kind_ = Preset::custom;
  r.num_ = std::move(numerator);
  r.den_ = std::move(denominator);
  return r;
}

bool StructureFunction::normalized() const {
  switch (kind_) {
    case Preset::heine:
    case Preset::biedenharn_macfarlane:
    case Preset::jagannathan_srinivasa:
    case Preset::chakrabarty_jagannathan:
      return true;
    default:
      return false;
  }
}

bool StructureFunction::ignores_p() const {
  return kind_ == Preset::heine || kind_ == Preset::quesne || kind_ == Preset::biedenharn_macfarlane;
}

RationalParams make_params(Preset preset, const BigRational& p, const BigRational& q) {
  return RationalParams(StructureFunction(preset), p, q);
}

Report bm_identity_suite(const BigRational& q, long n, long m) {
  if (q == 0 || q == 1 || q == -1) throw InvalidParameter("BM identities need q != 0, 1, -1");
  StructureFunction bm(Preset::biedenharn_macfarlane);
  const BigRational one = 1;
  auto num = [&](long k) { return bm.number(k, one, q); };
  Report r;
  r.suite = "bm_identities";
  auto check = [&](const std::string& name, const BigRational& lhs, const BigRational& rhs) {
    BigRational d = lhs - rhs;
    r.asserted(name, d == 0, to_string(d));
  };
  check("[n+m] = q^-m [n] + q^n [m]", num(n + m), ipow(q, -m) * num(n) + ipow(q, n) * num(m));
  check("[-m] = -[m]", num(-m), -num(m));
  check("[n] = [2][n-1] - [n-2]", num(n), num(2) * num(n - 1) - num(n - 2));
  BigRational closed = (ipow(q, n) - ipow(q, -n)) / (q - 1 / q);
  check("[n] = (q^n - q^-n)/(q - q^-1)", num(n), closed);
  return r;
}

BigRational reference_number(Preset preset, const BigRational& p, const BigRational& q, long n) {
  if (p == 1 && q == 1) return n;
  switch (preset) {
    case Preset::heine:
      return (1 - ipow(q, n)) / (1 - q);
    case Preset::quesne:
      return (1 - ipow(q, -n)) / (q - 1);
    case Preset::biedenharn_macfarlane:
      return (ipow(q, n) - ipow(q, -n)) / (q - 1 / q);
    case Preset::jagannathan_srinivasa:
      return (ipow(p, n) - ipow(q, n)) / (p - q);
    case Preset::chakrabarty_jagannathan:
      return (ipow(p, -n) - ipow(q, n)) / (1 / p - q);
    case Preset::hounkonnou_ngompe:
      return (ipow(p, n) - ipow(q, -n)) / (q - 1 / p);
    case Preset::custom:
      break;
  }
  throw InvalidParameter("reference_number is defined for presets only");
}

}  // namespace rpq::deform
