// SPDX-License-Identifier: Apache-2.0
#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace connlap::cli {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::pretty;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or pretty)");
}

void Table::add(std::vector<json> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add: row width does not match columns");
  rows.push_back(std::move(row));
}

json Table::row_object(std::size_t i) const {
  json o = json::object();
  for (std::size_t c = 0; c < columns.size(); ++c) o[columns[c]] = rows[i][c];
  return o;
}

json Table::to_json() const {
  json a = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) a.push_back(row_object(i));
  return a;
}

std::string format_cell(const json& v, int digits) {
  if (v.is_null()) return "·";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isnan(x)) return "·";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += format_cell(e, digits);
    }
    return s;
  }
  return v.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width in code points; cells are ASCII apart from "·".
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace

void render(const Table& t, Format f, std::ostream& out) {
  switch (f) {
    case Format::json:
      for (std::size_t i = 0; i < t.rows.size(); ++i) out << t.row_object(i).dump() << '\n';
      return;
    case Format::csv: {
      for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          const std::string cell = row[c].is_null() ? "" : format_cell(row[c], 10);
          out << (c ? "," : "") << csv_escape(cell);
        }
        out << '\n';
      }
      return;
    }
    case Format::pretty: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> w(t.columns.size());
      for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = width(t.columns[c]);
      for (const auto& row : t.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          line.push_back(format_cell(row[c], 6));
          w[c] = std::max(w[c], width(line.back()));
        }
      }
      auto emit = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t c = 0; c < line.size(); ++c) {
          s += line[c];
          if (c + 1 < line.size()) s += std::string(w[c] - width(line[c]) + 2, ' ');
        }
        out << s << '\n';
      };
      emit(t.columns);
      for (const auto& line : cells) emit(line);
      return;
    }
  }
}

json to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace connlap::cli
