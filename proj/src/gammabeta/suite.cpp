#include "rpq/gammabeta/gamma.hpp"
#include "rpq/gammabeta/power_basis.hpp"
#include "rpq/gammabeta/taylor.hpp"
#include "rpq/suites.hpp"

namespace rpq {

Report run_gammabeta_suite(const SuiteContext& ctx) {
  Report r;
  r.suite = "gammabeta";
  const auto& params = ctx.params;
  r.merge(gammabeta::gamma_identity_suite(params), "gamma: ");
  for (auto [n, k] : {std::pair{3L, 2L}, std::pair{2L, 1L}, std::pair{0L, 0L}, std::pair{5L, 3L}}) {
    r.merge(gammabeta::power_basis_identity_suite(params, n, k), "power basis: ");
  }
  for (deform::Preset preset : deform::all_presets()) {
    try {
      auto bound = deform::make_params(preset, params.p(), params.q());
      const std::string tag = deform::preset_name(preset) + ": ";
      for (auto [n, k] : {std::pair{1L, 1L}, std::pair{2L, 1L}, std::pair{4L, 2L}, std::pair{6L, 3L}}) {
        r.merge(gammabeta::power_basis_derivative_suite(bound, n, k), tag);
      }
      r.merge(gammabeta::taylor_suite(bound, 12), tag);
    } catch (const InvalidParameter& e) {
      r.measured(deform::preset_name(preset) + ": binding at the suite parameters", false, {}, e.what());
    }
  }
  return r;
}

}  // namespace rpq
