// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "connlap/int_matrix.hpp"

namespace connlap::cli {

enum class Format { pretty, json, csv };

Format parse_format(const std::string& s);

/// A rectangular result. Cells are JSON values so that the json renderer
/// keeps full precision while pretty and csv format them as text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  void add(std::vector<nlohmann::ordered_json> row);
  nlohmann::ordered_json row_object(std::size_t i) const;
  nlohmann::ordered_json to_json() const;  // array of row objects
};

/// pretty: aligned columns, 6 significant digits, "·" for missing values.
/// csv: header plus rows, 10 significant digits.
/// json: one object per row per line.
void render(const Table& t, Format f, std::ostream& out);

std::string format_cell(const nlohmann::ordered_json& v, int digits);

/// Exact integers become JSON numbers when they fit in 64 bits and decimal
/// strings otherwise.
nlohmann::ordered_json to_json(const Integer& x);
nlohmann::ordered_json to_json(const std::vector<Integer>& v);

/// NaN and infinities become null.
nlohmann::ordered_json number_or_null(double x);

}  // namespace connlap::cli
