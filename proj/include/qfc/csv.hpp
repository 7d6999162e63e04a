// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qfc/errors.hpp"

namespace qfc::csv {

struct Row {
  int line;  // 1-based line number in the source
  std::vector<std::string> fields;
};

inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

/// Parse a complete CSV document; the first non-empty line must equal
/// `header` exactly. Every data row must have the same field count as the
/// header. Errors carry 1-based line numbers.
inline std::vector<Row> parse(std::istream& in, const std::string& header) {
  std::vector<Row> rows;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  const std::size_t want = split(header).size();
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != header)
        throw data_error("line " + std::to_string(lineno) + ": expected header '" + header +
                         "', got '" + line + "'");
      header_seen = true;
      continue;
    }
    Row row{lineno, split(line)};
    if (row.fields.size() != want)
      throw data_error("line " + std::to_string(lineno) + ": expected " + std::to_string(want) +
                       " fields, got " + std::to_string(row.fields.size()));
    rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw data_error("empty input: missing header '" + header + "'");
  return rows;
}

inline std::vector<Row> parse_file(const std::string& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  return parse(in, header);
}

inline double to_double(const Row& row, std::size_t idx) {
  const std::string& s = row.fields[idx];
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw data_error("line " + std::to_string(row.line) + ": field " + std::to_string(idx + 1) +
                     " ('" + s + "') is not a number");
  }
}

inline long to_long(const Row& row, std::size_t idx) {
  const std::string& s = row.fields[idx];
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw data_error("line " + std::to_string(row.line) + ": field " + std::to_string(idx + 1) +
                     " ('" + s + "') is not an integer");
  }
}

}  // namespace qfc::csv
