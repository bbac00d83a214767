#include "rpq/suites.hpp"

#include "rpq/arith/errors.hpp"

namespace rpq {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"deform", "series", "quadrature", "gammabeta", "padicfun", "spinzeta"};
  return names;
}

Report run_suite(std::string_view name, const SuiteContext& ctx) {
  if (name == "deform") return run_deform_suite(ctx);
  if (name == "series") return run_series_suite(ctx);
  if (name == "quadrature") return run_quadrature_suite(ctx);
  if (name == "gammabeta") return run_gammabeta_suite(ctx);
  if (name == "padicfun") return run_padicfun_suite(ctx);
  if (name == "spinzeta") return run_spinzeta_suite(ctx);
  throw InvalidParameter("unknown suite '" + std::string(name) + "'");
}

}  // namespace rpq
