#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "rpq/arith/padic.hpp"
#include "rpq/deform/structure.hpp"
#include "rpq/padicfun/twist.hpp"
#include "rpq/report.hpp"

namespace rpq::cli {

using Json = nlohmann::ordered_json;

/// "num/den" (integers print without a denominator).
Json rational_json(const BigRational& x);

/// {"digits", "valuation", "precision", "representative"}.
Json padic_json(const PadicNumber& x);

/// {"levels", "values", "difference_valuations", "converged", "certified_digits", "value"}.
Json limit_json(const padicfun::LimitReport& limit);

/// {"name", "status": "pass"|"fail"|"measured-holds"|"measured-fails", "residual", "detail"}.
Json check_json(const IdentityCheck& check);

/// {"suite", "passed", "asserted", "measured", "checks": [...]}.
Json report_json(const Report& report);

/// Rational from a JSON integer or a "num/den" string.
BigRational rational_from_json(const Json& value);

/// Custom kernel {"numerator": [[s, t, coeff], ...], "denominator": [...]}.
deform::StructureFunction kernel_from_json(const Json& kernel);

/// Reads and parses a kernel file; IoError when unreadable, UsageError when malformed.
deform::StructureFunction load_kernel(const std::string& path);

}  // namespace rpq::cli
