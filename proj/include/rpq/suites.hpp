#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpq/deform/params.hpp"
#include "rpq/report.hpp"

namespace rpq {

/// Inputs shared by the module check suites.
struct SuiteContext {
  deform::RationalParams params = deform::make_params(deform::Preset::jagannathan_srinivasa, BigRational(4, 5),
                                                      BigRational(1, 2));
  /// Prime and working precision (digits) for the p-adic suites.
  long prime = 5;
  long precision = 16;
};

Report run_deform_suite(const SuiteContext& ctx);
Report run_series_suite(const SuiteContext& ctx);
Report run_quadrature_suite(const SuiteContext& ctx);
Report run_gammabeta_suite(const SuiteContext& ctx);
Report run_padicfun_suite(const SuiteContext& ctx);
Report run_spinzeta_suite(const SuiteContext& ctx);

/// deform, series, quadrature, gammabeta, padicfun, spinzeta.
const std::vector<std::string>& suite_names();

/// Dispatches by name; throws InvalidParameter for an unknown suite.
Report run_suite(std::string_view name, const SuiteContext& ctx);

}  // namespace rpq
