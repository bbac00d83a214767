#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpq/deform/params.hpp"
#include "rpq/report.hpp"
#include "rpq/series/polynomial.hpp"

namespace rpq::gammabeta {

using deform::RationalParams;
using series::Polynomial;

/// forward: f = sum c_k (x (-) a)^k, reverse: f = sum c_k (a (-) x)^k.
enum class TaylorForm { forward, reverse };

TaylorForm parse_taylor_form(std::string_view name);
std::string taylor_form_name(TaylorForm form);

/// forward: c_k = xi1^(-C(k,2)) (d^k f)(a xi1^(-k)) / [k]!
/// reverse: c_k = (-1)^k xi2^(-C(k,2)) (d^k f)(a xi2^(-k)) / [k]!
/// Throws SingularityError if some [k]! vanishes.
std::vector<BigRational> taylor_expand(const Polynomial& f, const BigRational& a, const RationalParams& params,
                                       TaylorForm form);

/// sum c_k basis_k(x) expanded as a polynomial in x.
Polynomial taylor_reconstruct(const std::vector<BigRational>& coefficients, const BigRational& a,
                              const RationalParams& params, TaylorForm form);

/// Both expansions of sample polynomials up to degree max_degree reconstruct them exactly.
Report taylor_suite(const RationalParams& params, long max_degree);

}  // namespace rpq::gammabeta
