#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "rpq/arith/rational.hpp"

namespace rpq {

/// 100 significant decimal digits; used only where a value is genuinely irrational
/// (non-integer gamma arguments, tail bounds).
using HighFloat = boost::multiprecision::cpp_bin_float_100;

inline HighFloat to_high(const BigInt& x) { return HighFloat(x.get_str()); }

inline HighFloat to_high(const BigRational& x) {
  return to_high(BigInt(x.get_num())) / to_high(BigInt(x.get_den()));
}

/// Scientific notation with the given number of significant digits.
inline std::string high_text(const HighFloat& x, int digits = 40) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace rpq
