#include "rpq/cli/tables.hpp"

#include <sstream>

#include "rpq/cli/app.hpp"
#include "rpq/cli/json_io.hpp"
#include "rpq/padicfun/volkenborn.hpp"
#include "rpq/series/functions.hpp"
#include "rpq/spinzeta/zeta.hpp"

namespace rpq::cli {

namespace {

using Row = std::vector<std::string>;

struct KindInfo {
  TableKind kind;
  const char* name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {TableKind::number, "number", {"preset", "p", "q", "xi1", "xi2", "n"}, {"value"}},
      {TableKind::factorial, "factorial", {"preset", "p", "q", "xi1", "xi2", "n"}, {"value"}},
      {TableKind::binomial, "binomial", {"preset", "p", "q", "xi1", "xi2", "m", "n"}, {"value"}},
      {TableKind::bernoulli, "bernoulli", {"preset", "p", "q", "xi1", "xi2", "x", "n"}, {"value"}},
      {TableKind::euler, "euler", {"preset", "p", "q", "xi1", "xi2", "x", "n"}, {"value"}},
      {TableKind::genocchi, "genocchi", {"preset", "p", "q", "xi1", "xi2", "x", "n"}, {"value"}},
      {TableKind::zigzag, "zigzag", {"preset", "p", "q", "xi1", "xi2", "n"}, {"value"}},
      {TableKind::volkenborn,
       "volkenborn",
       {"preset", "prime", "rho", "q", "precision", "levels", "n"},
       {"value", "certified_digits"}},
      {TableKind::zeta, "zeta", {"p", "s"}, {"value_num", "value_den"}},
  };
  return table;
}

const KindInfo& info(TableKind kind) {
  for (const auto& k : kinds()) {
    if (k.kind == kind) return k;
  }
  throw InvalidParameter("unknown table kind");
}

long cell_long(const std::string& cell, const std::string& column) {
  BigRational v = parse_scalar(cell, column);
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw UsageError(column + " must be an integer, got " + cell);
  return v.get_num().get_si();
}

deform::StructureFunction structure_from_cell(const std::string& cell,
                                              const std::optional<deform::StructureFunction>& custom) {
  if (cell == "custom") {
    if (!custom) throw UsageError("row uses a custom kernel but none was supplied");
    return *custom;
  }
  try {
    return deform::StructureFunction(deform::parse_preset(cell));
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

deform::RationalParams binding_from_cells(const Row& in, const std::optional<deform::StructureFunction>& custom) {
  return deform::RationalParams(structure_from_cell(in[0], custom), parse_scalar(in[1], "p"),
                                parse_scalar(in[2], "q"), parse_scalar(in[3], "xi1"), parse_scalar(in[4], "xi2"));
}

series::Family family_of(TableKind kind) {
  switch (kind) {
    case TableKind::euler: return series::Family::euler;
    case TableKind::genocchi: return series::Family::genocchi;
    default: return series::Family::bernoulli;
  }
}

// Outputs of one row from its input cells.
Row evaluate(TableKind kind, const Row& in, const std::optional<deform::StructureFunction>& custom) {
  switch (kind) {
    case TableKind::number:
    case TableKind::factorial:
    case TableKind::zigzag: {
      const auto params = binding_from_cells(in, custom);
      const long n = cell_long(in[5], "n");
      if (n < 0) throw UsageError("n must be >= 0");
      if (kind == TableKind::number) return {rpq::to_string(deform::rpq_number(params, n))};
      if (kind == TableKind::factorial) return {rpq::to_string(deform::rpq_factorial(params, n))};
      return {rpq::to_string(series::zigzag_numbers(params, n + 1).back())};
    }
    case TableKind::binomial: {
      const auto params = binding_from_cells(in, custom);
      return {rpq::to_string(deform::rpq_binomial(params, cell_long(in[5], "m"), cell_long(in[6], "n")))};
    }
    case TableKind::bernoulli:
    case TableKind::euler:
    case TableKind::genocchi: {
      const auto params = binding_from_cells(in, custom);
      const long n = cell_long(in[6], "n");
      if (n < 0) throw UsageError("n must be >= 0");
      auto values = series::generating_polynomials(params, family_of(kind), parse_scalar(in[5], "x"), n);
      return {rpq::to_string(values.back())};
    }
    case TableKind::volkenborn: {
      const padicfun::TwistParams tw(cell_long(in[1], "prime"), parse_scalar(in[2], "rho"), parse_scalar(in[3], "q"),
                                     cell_long(in[4], "precision"), structure_from_cell(in[0], custom));
      const long levels = cell_long(in[5], "levels");
      const long n = cell_long(in[6], "n");
      if (n < 0) throw UsageError("n must be >= 0");
      auto f = [&tw, n](long t) { return tw.number(t).pow(n); };
      auto limit = padicfun::volkenborn_integral(f, levels, tw);
      std::string value = limit.value.is_zero() ? "0" : rpq::to_string(limit.value.to_rational());
      return {value, std::to_string(limit.certified_digits)};
    }
    case TableKind::zeta: {
      const long p = cell_long(in[0], "p");
      require_prime(p);
      const BigRational v = spinzeta::zeta_spin_half(p, cell_long(in[1], "s"));
      return {rpq::to_string(BigInt(v.get_num())), rpq::to_string(BigInt(v.get_den()))};
    }
  }
  return {};
}

Row complete(TableKind kind, Row in, const std::optional<deform::StructureFunction>& custom) {
  Row out = evaluate(kind, in, custom);
  in.insert(in.end(), out.begin(), out.end());
  return in;
}

std::string preset_cell(const deform::StructureFunction& s) { return s.is_custom() ? "custom" : s.name(); }

Row deformed_inputs(const deform::RationalParams& params) {
  return {preset_cell(params.structure()), rpq::to_string(params.p()), rpq::to_string(params.q()),
          rpq::to_string(params.xi1()), rpq::to_string(params.xi2())};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TableKind parse_table_kind(std::string_view name) {
  for (const auto& k : kinds()) {
    if (name == k.name) return k.kind;
  }
  std::string known;
  for (const auto& k : kinds()) known += (known.empty() ? "" : ", ") + std::string(k.name);
  throw UsageError("unknown table kind '" + std::string(name) + "' (" + known + ")");
}

std::string table_kind_name(TableKind kind) { return info(kind).name; }

std::vector<std::string> table_columns(TableKind kind) {
  const auto& k = info(kind);
  std::vector<std::string> cols = k.inputs;
  cols.insert(cols.end(), k.outputs.begin(), k.outputs.end());
  return cols;
}

Table build_table(TableKind kind, const TableGrid& grid, const deform::RationalParams& params,
                  const std::optional<padicfun::TwistParams>& twist) {
  Table t;
  t.columns = table_columns(kind);
  std::optional<deform::StructureFunction> custom;
  if (params.structure().is_custom()) custom = params.structure();
  for (long n = grid.from; n <= grid.to && kind != TableKind::zeta; ++n) {
    Row in;
    switch (kind) {
      case TableKind::binomial:
        if (n > grid.m) continue;
        in = deformed_inputs(params);
        in.push_back(std::to_string(grid.m));
        break;
      case TableKind::bernoulli:
      case TableKind::euler:
      case TableKind::genocchi:
        in = deformed_inputs(params);
        in.push_back(rpq::to_string(grid.x));
        break;
      case TableKind::volkenborn: {
        if (!twist) throw InvalidParameter("volkenborn tables need a p-adic twist");
        if (twist->structure().is_custom()) custom = twist->structure();
        in = {preset_cell(twist->structure()), std::to_string(twist->prime()), rpq::to_string(twist->rho_rational()),
              rpq::to_string(twist->q_rational()), std::to_string(twist->precision()), std::to_string(grid.levels)};
        break;
      }
      default:
        in = deformed_inputs(params);
        break;
    }
    in.push_back(std::to_string(n));
    t.rows.push_back(complete(kind, in, custom));
  }
  if (kind == TableKind::zeta) {
    for (long p : grid.primes) {
      for (long s = grid.from; s <= grid.to; ++s) {
        try {
          t.rows.push_back(complete(kind, {std::to_string(p), std::to_string(s)}, custom));
        } catch (const PoleError&) {
        }
      }
    }
  }
  return t;
}

std::vector<std::size_t> verify_table(TableKind kind, const Table& table,
                                      const std::optional<deform::StructureFunction>& custom) {
  if (table.columns != table_columns(kind)) {
    throw UsageError("table columns do not match the " + table_kind_name(kind) + " layout");
  }
  const std::size_t inputs = info(kind).inputs.size();
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const Row& row = table.rows[i];
    if (row.size() != table.columns.size()) {
      bad.push_back(i);
      continue;
    }
    Row again = complete(kind, Row(row.begin(), row.begin() + static_cast<long>(inputs)), custom);
    if (again != row) bad.push_back(i);
  }
  return bad;
}

std::string table_to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const Row& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += "\n";
  };
  line(table.columns);
  for (const auto& r : table.rows) line(r);
  return out;
}

Table table_from_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Row cells = split(line, ',');
    if (header) {
      t.columns = cells;
      header = false;
    } else {
      if (cells.size() != t.columns.size()) {
        throw UsageError("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                         std::to_string(t.columns.size()));
      }
      t.rows.push_back(cells);
    }
  }
  if (header) throw UsageError("CSV table has no header");
  return t;
}

std::string table_to_json(const Table& table) {
  Json j;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j.dump(2) + "\n";
}

Table table_from_json(const std::string& text) {
  try {
    Json j = Json::parse(text);
    Table t;
    t.columns = j.at("columns").get<Row>();
    t.rows = j.at("rows").get<std::vector<Row>>();
    for (const auto& r : t.rows) {
      if (r.size() != t.columns.size()) throw UsageError("JSON table has a ragged row");
    }
    return t;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed JSON table: ") + e.what());
  }
}

}  // namespace rpq::cli
