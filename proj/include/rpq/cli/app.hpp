#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rpq/arith/errors.hpp"
#include "rpq/deform/params.hpp"
#include "rpq/padicfun/twist.hpp"

namespace rpq::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitParseError = 2,
  kExitDomainError = 3,
  kExitIoError = 4,
};

/// Malformed command line or input text; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Unreadable input or unwritable output; maps to exit code 4.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class Format { automatic, json, csv, plain };

Format parse_format(const std::string& name);

/// Global options shared by every subcommand.  Scalars are kept as the strings given on the
/// command line and parsed to exact rationals on use.
struct RunConfig {
  std::string subcommand;
  std::string preset = "jagannathan_srinivasa";
  std::string kernel_path;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<std::string> xi1;
  std::optional<std::string> xi2;
  std::optional<std::string> rho;
  std::optional<long> prime;
  long precision = 16;
  std::optional<long> order;
  bool classical_limit = false;
  Format format = Format::automatic;
  std::string out;
};

/// Exact rational from a command-line string; UsageError when malformed.
BigRational parse_scalar(const std::string& text, const std::string& what);

/// The structure function chosen by --preset or --kernel.
deform::StructureFunction build_structure(const RunConfig& config);

/// Rational binding from --preset/--kernel, -p, -q, --xi1, --xi2 (defaults p = 4/5, q = 1/2).
deform::RationalParams build_params(const RunConfig& config);

/// p-adic twist from --prime, --rho, -q, --precision; rho = q = 1 with --classical-limit and
/// (1 + p, 1 + 2p), or (5, 9) at p = 2, when neither is given.
padicfun::TwistParams build_twist(const RunConfig& config);

/// Runs one command line (without the program name).  Data goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpq::cli
