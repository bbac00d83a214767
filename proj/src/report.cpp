#include "rpq/report.hpp"

namespace rpq {

void Report::asserted(std::string name, bool passed, std::string residual, std::string detail) {
  checks.push_back({std::move(name), true, passed, std::move(residual), std::move(detail)});
}

void Report::measured(std::string name, bool holds, std::string residual, std::string detail) {
  checks.push_back({std::move(name), false, holds, std::move(residual), std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (IdentityCheck c : other.checks) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

bool Report::all_asserted_pass() const { return first_failure() == nullptr; }

const IdentityCheck* Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.asserted && !c.passed) return &c;
  }
  return nullptr;
}

std::size_t Report::asserted_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.asserted ? 1 : 0;
  return n;
}

}  // namespace rpq
