#pragma once

// The three level tables and their text / CSV / JSON renderings.

#include <siegel/bound.hpp>
#include <siegel/integer.hpp>
#include <siegel/json_io.hpp>
#include <siegel/polarization.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siegel {

enum class TableFamily { GByD, SByT, Principal };
enum class TableFormat { Text, Csv, Json };

inline TableFamily parse_table_family(std::string_view s) {
  if (s == "g-by-d") return TableFamily::GByD;
  if (s == "s-by-t") return TableFamily::SByT;
  if (s == "principal") return TableFamily::Principal;
  throw std::invalid_argument("unknown table family: " + std::string(s));
}

inline TableFormat parse_table_format(std::string_view s) {
  if (s == "text") return TableFormat::Text;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown table format: " + std::string(s));
}

inline const char* to_string(TableFamily f) {
  switch (f) {
    case TableFamily::GByD: return "g-by-d";
    case TableFamily::SByT: return "s-by-t";
    case TableFamily::Principal: return "principal";
  }
  return "?";
}

struct TableCell {
  std::optional<Integer> n;  // empty: excluded by the hypotheses
  bool gcd_adjusted = false;

  std::string text() const {
    if (!n) return "";
    return gcd_adjusted ? "(" + n->get_str() + ")" : n->get_str();
  }
};

struct LevelTable {
  TableFamily family = TableFamily::Principal;
  std::string corner;  // e.g. "g\d"
  std::string row_name;
  std::string column_name;
  std::vector<std::string> rows;
  std::vector<long> columns;
  std::vector<std::vector<TableCell>> cells;
};

struct TableRanges {
  long row_first = 0, row_last = -1;
  long col_first = 0, col_last = -1;
};

inline TableRanges default_ranges(TableFamily f) {
  switch (f) {
    case TableFamily::GByD: return {3, 9, 3, 20};
    case TableFamily::SByT: return {1, 10, 1, 10};
    case TableFamily::Principal: return {0, 0, 1, 9};
  }
  return {};
}

/// Steps (1, ..., 1, d) for genus g.
inline PolarizationType one_one_d(long g, long d) {
  std::vector<Integer> steps(static_cast<std::size_t>(g - 1), Integer(1));
  steps.back() = d;
  return PolarizationType(std::move(steps));
}

inline LevelTable build_table(TableFamily family, const TableRanges& r) {
  LevelTable t;
  t.family = family;
  for (long c = r.col_first; c <= r.col_last; ++c) t.columns.push_back(c);
  if (family == TableFamily::Principal) {
    t.corner = "g";
    t.column_name = "g";
    t.row_name = "n";
    t.rows = {"n"};
    std::vector<TableCell> row;
    for (long g : t.columns) row.push_back({principal_minimal_level(g), false});
    t.cells.push_back(std::move(row));
    return t;
  }
  const bool gd = family == TableFamily::GByD;
  t.corner = gd ? "g\\d" : "s\\t";
  t.row_name = gd ? "g" : "s";
  t.column_name = gd ? "d" : "t";
  LevelOptions opt;
  opt.enforce_min3 = true;
  opt.enforce_gcd = !gd;
  for (long a = r.row_first; a <= r.row_last; ++a) {
    t.rows.push_back(std::to_string(a));
    std::vector<TableCell> row;
    for (long b : t.columns) {
      TableCell cell;
      const PolarizationType type =
          gd ? one_one_d(a, b) : PolarizationType(std::vector<Integer>{Integer(a), Integer(b)});
      const bool excluded = !gd && (a * b == 2 || std::gcd(a, b) > 1);
      if (!excluded) {
        const BoundReport rep = minimal_level(type, opt);
        if (rep.final_n) {
          cell.n = rep.final_n;
          cell.gcd_adjusted = rep.gcd_incremented_by > 0;
        }
      }
      row.push_back(std::move(cell));
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

inline LevelTable build_table(TableFamily family) { return build_table(family, default_ranges(family)); }

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

inline std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace detail

/// Grid with a header row, a rule, right-aligned cells, "(n)" for gcd-adjusted
/// values and blanks for excluded ones. Trailing spaces are dropped.
inline std::string format_text(const LevelTable& t) {
  std::size_t label_w = t.corner.size();
  for (const auto& r : t.rows) label_w = std::max(label_w, r.size());
  std::size_t cell_w = 1;
  for (long c : t.columns) cell_w = std::max(cell_w, std::to_string(c).size());
  for (const auto& row : t.cells) {
    for (const auto& c : row) cell_w = std::max(cell_w, c.text().size());
  }
  std::string out = detail::pad_right(t.corner, label_w) + " |";
  for (long c : t.columns) out += " " + detail::pad_left(std::to_string(c), cell_w);
  out = detail::rstrip(out) + "\n";
  out += std::string(label_w + 1, '-') + "+" + std::string(t.columns.size() * (cell_w + 1), '-') + "\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::string line = detail::pad_left(t.rows[i], label_w) + " |";
    for (const auto& c : t.cells[i]) line += " " + detail::pad_left(c.text(), cell_w);
    out += detail::rstrip(line) + "\n";
  }
  return out;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string format_csv(const LevelTable& t) {
  std::string out = csv_field(t.corner);
  for (long c : t.columns) out += "," + std::to_string(c);
  out += "\r\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += csv_field(t.rows[i]);
    for (const auto& c : t.cells[i]) out += "," + csv_field(c.text());
    out += "\r\n";
  }
  return out;
}

inline Json table_to_json(const LevelTable& t) {
  Json j;
  j["family"] = to_string(t.family);
  j["row_name"] = t.row_name;
  j["column_name"] = t.column_name;
  j["rows"] = t.rows;
  j["columns"] = t.columns;
  j["cells"] = Json::array();
  for (const auto& row : t.cells) {
    Json jr = Json::array();
    for (const auto& c : row) {
      if (!c.n) {
        jr.push_back(nullptr);
      } else {
        jr.push_back({{"n", json_integer(*c.n)}, {"gcd_adjusted", c.gcd_adjusted}});
      }
    }
    j["cells"].push_back(std::move(jr));
  }
  return j;
}

inline std::string emit_table(TableFamily family, TableFormat format) {
  const LevelTable t = build_table(family);
  switch (format) {
    case TableFormat::Text: return format_text(t);
    case TableFormat::Csv: return format_csv(t);
    case TableFormat::Json: return table_to_json(t).dump(2) + "\n";
  }
  return {};
}

}  // namespace siegel
