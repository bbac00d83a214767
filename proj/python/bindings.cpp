#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rpq/cli/app.hpp"
#include "rpq/deform/params.hpp"
#include "rpq/gammabeta/gamma.hpp"
#include "rpq/padicfun/gamma.hpp"
#include "rpq/series/functions.hpp"
#include "rpq/spinzeta/zeta.hpp"
#include "rpq/suites.hpp"

namespace py = pybind11;
using namespace rpq;

namespace {

deform::RationalParams bind(const std::string& preset, const std::string& p, const std::string& q, bool classical) {
  deform::StructureFunction structure(deform::parse_preset(preset));
  if (classical) return deform::RationalParams::classical(structure, BigRational(1));
  return deform::RationalParams(structure, parse_rational(p), parse_rational(q));
}

std::vector<std::string> texts(const std::vector<BigRational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact (p,q)-deformed calculus, p-adic special functions and local zeta functions";

  py::register_exception<Error>(m, "RpqError", PyExc_ValueError);

  m.def(
      "number",
      [](long n, const std::string& preset, const std::string& p, const std::string& q, bool classical) {
        return to_string(deform::rpq_number(bind(preset, p, q, classical), n));
      },
      py::arg("n"), py::arg("preset") = "js", py::arg("p") = "4/5", py::arg("q") = "1/2", py::arg("classical") = false);
  m.def(
      "factorial",
      [](long n, const std::string& preset, const std::string& p, const std::string& q, bool classical) {
        return to_string(deform::rpq_factorial(bind(preset, p, q, classical), n));
      },
      py::arg("n"), py::arg("preset") = "js", py::arg("p") = "4/5", py::arg("q") = "1/2", py::arg("classical") = false);
  m.def(
      "binomial",
      [](long m_, long n, const std::string& preset, const std::string& p, const std::string& q, bool classical) {
        return to_string(deform::rpq_binomial(bind(preset, p, q, classical), m_, n));
      },
      py::arg("m"), py::arg("n"), py::arg("preset") = "js", py::arg("p") = "4/5", py::arg("q") = "1/2",
      py::arg("classical") = false);
  m.def(
      "zigzag",
      [](long count, const std::string& preset, const std::string& p, const std::string& q, bool classical) {
        return texts(series::zigzag_numbers(bind(preset, p, q, classical), count));
      },
      py::arg("count"), py::arg("preset") = "js", py::arg("p") = "4/5", py::arg("q") = "1/2", py::arg("classical") = false);
  m.def(
      "family",
      [](const std::string& name, const std::string& x, long order, const std::string& preset, const std::string& p,
         const std::string& q, bool classical) {
        return texts(series::generating_polynomials(bind(preset, p, q, classical), series::parse_family(name),
                                                    parse_rational(x), order));
      },
      py::arg("name"), py::arg("x") = "0", py::arg("order") = 8, py::arg("preset") = "js", py::arg("p") = "4/5",
      py::arg("q") = "1/2", py::arg("classical") = false);
  m.def(
      "gamma",
      [](const std::string& z, const std::string& preset, const std::string& p, const std::string& q, bool classical) {
        auto v = gammabeta::gamma_rpq(parse_rational(z), bind(preset, p, q, classical));
        py::dict d;
        d["exact"] = v.exact ? py::object(py::str(to_string(*v.exact))) : py::object(py::none());
        d["value"] = high_text(v.value);
        d["relative_tail_bound"] = high_text(v.relative_tail_bound, 6);
        d["truncation"] = v.truncation;
        return d;
      },
      py::arg("z"), py::arg("preset") = "js", py::arg("p") = "4/5", py::arg("q") = "1/2", py::arg("classical") = false);
  m.def(
      "padic_gamma",
      [](long n, long prime, const std::string& rho, const std::string& q, long precision) {
        padicfun::TwistParams tw(prime, parse_rational(rho), parse_rational(q), precision);
        return to_string(padicfun::padic_gamma_rpq(n, tw).to_rational());
      },
      py::arg("n"), py::arg("prime"), py::arg("rho") = "1", py::arg("q") = "1", py::arg("precision") = 16,
      "Representative of Gamma^p(n) modulo the working precision.");
  m.def(
      "zeta_spin_half", [](long prime, long s) { return to_string(spinzeta::zeta_spin_half(prime, s)); },
      py::arg("prime"), py::arg("s"));
  m.def(
      "ghost_boundary",
      [](const std::string& group, long l) {
        return to_string(spinzeta::ghost_boundary(spinzeta::parse_ghost_group(group), l));
      },
      py::arg("group"), py::arg("l"));
  m.def("suite_names", &suite_names);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one rpqcalc command line; returns (exit_code, stdout, stderr).");
}
