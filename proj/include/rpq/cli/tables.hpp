#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpq/deform/params.hpp"
#include "rpq/padicfun/twist.hpp"

namespace rpq::cli {

/// Rows of exact cells.  Every row carries the parameters it was computed from, so it can be
/// re-evaluated on its own.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

enum class TableKind { number, factorial, binomial, bernoulli, euler, genocchi, zigzag, volkenborn, zeta };

TableKind parse_table_kind(std::string_view name);
std::string table_kind_name(TableKind kind);
/// Column names of a kind, in output order.
std::vector<std::string> table_columns(TableKind kind);

/// Index range n = from..to (empty when to < from), plus the kind-specific knobs.
struct TableGrid {
  long from = 0;
  long to = 10;
  /// Upper index m for binomial rows (0 <= n <= m).
  long m = 10;
  /// Evaluation point for the polynomial families.
  BigRational x = 0;
  /// Primes for zeta rows; s runs over from..to.
  std::vector<long> primes = {2, 3, 5};
  long levels = 6;
};

/// Deformed rows (number .. zigzag) use the binding; volkenborn rows use the twist.
/// Zeta rows skip (p, s) pairs at a pole.
Table build_table(TableKind kind, const TableGrid& grid, const deform::RationalParams& params,
                  const std::optional<padicfun::TwistParams>& twist);

/// Re-parses every row, re-evaluates it through the library and compares each cell exactly.
/// Returns the indices of rows that do not reproduce.  A custom kernel must be supplied for
/// rows whose preset column reads "custom".
std::vector<std::size_t> verify_table(TableKind kind, const Table& table,
                                      const std::optional<deform::StructureFunction>& custom = std::nullopt);

std::string table_to_csv(const Table& table);
/// Header line then rows; blank lines are skipped.  Throws UsageError on ragged rows.
Table table_from_csv(const std::string& text);

std::string table_to_json(const Table& table);
Table table_from_json(const std::string& text);

}  // namespace rpq::cli
