#include <sstream>

#include <json.hpp>

#include "prf/bounds.hpp"

namespace prf {

using json = nlohmann::json;

TableId parse_table_id(const std::string& text) {
  for (TableId id : {TableId::S5S7, TableId::N54, TableId::S9, TableId::T6, TableId::T8})
    if (table_name(id) == text) return id;
  throw ParseError("unknown table '" + text + "' (S5S7, N54, S9, T6, T8)");
}

std::string table_name(TableId id) {
  switch (id) {
    case TableId::S5S7: return "S5S7";
    case TableId::N54: return "N54";
    case TableId::S9: return "S9";
    case TableId::T6: return "T6";
    case TableId::T8: return "T8";
  }
  return "?";
}

namespace {

TableCell bound_cell(const FieldCtx& ctx, Family family, unsigned d, const ProviderOptions& opts) {
  TableCell cell;
  try {
    BoundReport rep = bound(ctx, family, d, opts);
    cell.value = rep.value;
    cell.source = family_name(family) + "_" + std::to_string(d);
    cell.report = std::move(rep);
  } catch (const MissingCountError& e) {
    cell.source = "missing " + e.missing();
  } catch (const NonDivisibleError& e) {
    cell.source = e.what();
  }
  return cell;
}

}  // namespace

Table emit_table(TableId id, const std::vector<unsigned>& qs, const ProviderOptions& opts) {
  Table t;
  t.id = id;
  switch (id) {
    case TableId::S5S7: t.header = {"q", "M(q,q-5)>=", "M(q,q-7)>="}; break;
    case TableId::N54: t.header = {"q", "N_{5,4}(q)", "(q+1)q^3(q-1)^2/2"}; break;
    case TableId::S9: t.header = {"q", "M(q,q-9)>="}; break;
    case TableId::T6: t.header = {"n", "M(q+1,q-5)>="}; break;
    case TableId::T8: t.header = {"n", "M(q+1,q-7)>="}; break;
  }
  for (unsigned q : qs) {
    TableRow row;
    row.q = q;
    const std::size_t width = t.header.size() - 1;
    auto pp = prime_power(q);
    if (!pp || q > FieldCtx::kMaxOrder) {
      for (std::size_t i = 0; i < width; ++i) row.cells.push_back(TableCell{std::nullopt, "not a field order", {}});
      t.rows.push_back(std::move(row));
      continue;
    }
    const FieldCtx ctx(default_spec(pp->first, pp->second));
    switch (id) {
      case TableId::S5S7:
        row.cells.push_back(bound_cell(ctx, Family::S, 5, opts));
        row.cells.push_back(bound_cell(ctx, Family::S, 7, opts));
        break;
      case TableId::N54: {
        TableCell c;
        if (auto got = provide_count(ctx, 5, 4, opts)) {
          c.value = got->count;
          c.source = got->source;
        } else {
          c.source = "missing (5,4)";
        }
        row.cells.push_back(std::move(c));
        auto f = formula(q, 5, 4, false);
        row.cells.push_back(TableCell{f->value, "formula " + f->expression, {}});
        break;
      }
      case TableId::S9: row.cells.push_back(bound_cell(ctx, Family::S, 9, opts)); break;
      case TableId::T6: row.cells.push_back(bound_cell(ctx, Family::T, 6, opts)); break;
      case TableId::T8: row.cells.push_back(bound_cell(ctx, Family::T, 8, opts)); break;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

unsigned first_column(const Table& t, unsigned q) {
  return t.id == TableId::T6 || t.id == TableId::T8 ? q + 1 : q;
}

}  // namespace

std::string table_to_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    out << first_column(t, row.q);
    for (const auto& c : row.cells) out << ',' << (c.value ? to_decimal(*c.value) : std::string("pending"));
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json cells = json::array();
    for (const auto& c : row.cells) {
      json cell{{"value", c.value ? json(to_decimal(*c.value)) : json("pending")}, {"source", c.source}};
      if (c.report) cell["report"] = json::parse(report_to_json(*c.report));
      cells.push_back(std::move(cell));
    }
    rows.push_back(json{{t.header[0], first_column(t, row.q)}, {"q", row.q}, {"cells", cells}});
  }
  return json{{"table", table_name(t.id)}, {"header", t.header}, {"rows", rows}}.dump(2);
}

}  // namespace prf
