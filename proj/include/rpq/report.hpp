#pragma once

#include <string>
#include <vector>

namespace rpq {

/// One identity evaluated by a suite.  Asserted identities count towards pass/fail;
/// measured ones only record their residual.
struct IdentityCheck {
  std::string name;
  bool asserted = true;
  bool passed = false;
  /// Exact residual ("num/den"), a valuation ("v>=k"), or a decimal bound for real-valued checks.
  std::string residual;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<IdentityCheck> checks;

  void add(IdentityCheck check) { checks.push_back(std::move(check)); }
  void asserted(std::string name, bool passed, std::string residual = {}, std::string detail = {});
  void measured(std::string name, bool holds, std::string residual = {}, std::string detail = {});
  /// Appends all checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  bool all_asserted_pass() const;
  /// First asserted check that failed, or nullptr.
  const IdentityCheck* first_failure() const;
  std::size_t asserted_count() const;
};

}  // namespace rpq
