#include "rpq/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rpq/cli/app.hpp"

namespace rpq::cli {

Json rational_json(const BigRational& x) { return rpq::to_string(x); }

Json padic_json(const PadicNumber& x) {
  Json j;
  j["digits"] = x.to_string();
  if (x.is_zero()) {
    j["valuation"] = x.is_exact_zero() ? Json(nullptr) : Json(x.valuation());
    j["precision"] = 0;
    j["representative"] = "0";
    return j;
  }
  j["valuation"] = x.valuation();
  j["precision"] = x.precision();
  j["representative"] = rational_json(x.to_rational());
  return j;
}

Json limit_json(const padicfun::LimitReport& limit) {
  Json j;
  j["levels"] = limit.levels;
  Json values = Json::array();
  for (const auto& v : limit.values) values.push_back(padic_json(v));
  j["values"] = values;
  j["difference_valuations"] = limit.difference_valuations;
  j["converged"] = limit.converged;
  j["certified_digits"] = limit.certified_digits;
  j["value"] = padic_json(limit.value);
  return j;
}

Json check_json(const IdentityCheck& check) {
  Json j;
  j["name"] = check.name;
  if (check.asserted) {
    j["status"] = check.passed ? "pass" : "fail";
  } else {
    j["status"] = check.passed ? "measured-holds" : "measured-fails";
  }
  j["residual"] = check.residual;
  j["detail"] = check.detail;
  return j;
}

Json report_json(const Report& report) {
  Json j;
  j["suite"] = report.suite;
  j["passed"] = report.all_asserted_pass();
  j["asserted"] = report.asserted_count();
  j["measured"] = report.checks.size() - report.asserted_count();
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  return j;
}

BigRational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return BigRational(value.get<long>());
  if (value.is_string()) return parse_scalar(value.get<std::string>(), "kernel coefficient");
  throw UsageError("expected an integer or a \"num/den\" string, got " + value.dump());
}

namespace {

deform::LaurentPoly2 laurent_from_json(const Json& terms, const std::string& side) {
  if (!terms.is_array()) throw UsageError("kernel " + side + " must be an array of [s, t, coeff]");
  deform::LaurentPoly2 poly;
  for (const auto& term : terms) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number_integer()) {
      throw UsageError("kernel " + side + " term must be [s, t, coeff], got " + term.dump());
    }
    poly.add_term(term[0].get<long>(), term[1].get<long>(), rational_from_json(term[2]));
  }
  return poly;
}

}  // namespace

deform::StructureFunction kernel_from_json(const Json& kernel) {
  if (!kernel.is_object() || !kernel.contains("numerator") || !kernel.contains("denominator")) {
    throw UsageError("kernel must be an object with \"numerator\" and \"denominator\"");
  }
  return deform::StructureFunction::custom(laurent_from_json(kernel["numerator"], "numerator"),
                                           laurent_from_json(kernel["denominator"], "denominator"));
}

deform::StructureFunction load_kernel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read kernel file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json kernel;
  try {
    kernel = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw UsageError("kernel file '" + path + "' is not valid JSON: " + e.what());
  }
  return kernel_from_json(kernel);
}

}  // namespace rpq::cli
