// Copyright 2026 The nomiss Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nomiss/matrix_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "nomiss/errors.h"

namespace nomiss {

void CleanConfig::validate() const {
  if (gamma.num() >= gamma.den()) {
    throw UsageError("gamma must lie in [0, 1), got " + gamma.to_string());
  }
  if (missing_tokens.empty()) throw UsageError("missing token list is empty");
  if (delimiter == '\n' || delimiter == '\r' || delimiter == '\0') {
    throw UsageError("invalid delimiter");
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

DataTable parse_table(std::string_view text, const CleanConfig& config) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find('\n', start);
    std::string_view line = pos == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  // A terminating newline does not start another row.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  DataTable table;
  std::size_t first = 0;
  if (config.has_header) {
    if (lines.empty()) throw DataError("empty input: no header line");
    table.header = split(lines[0], config.delimiter);
    first = 1;
  }
  const std::size_t id_fields = config.has_row_ids ? 1 : 0;
  std::size_t width = 0;
  for (std::size_t k = first; k < lines.size(); ++k) {
    std::vector<std::string> fields = split(lines[k], config.delimiter);
    if (k == first) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw DataError("ragged input: line " + std::to_string(k + 1) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(width));
    }
    if (config.has_row_ids) {
      table.row_ids.push_back(std::move(fields.front()));
      fields.erase(fields.begin());
    }
    table.cells.push_back(std::move(fields));
  }
  if (table.cells.empty()) throw DataError("empty input: no data rows");
  if (width <= id_fields) throw DataError("empty input: no data columns");
  if (config.has_header && table.header.size() != width) {
    throw DataError("header has " + std::to_string(table.header.size()) +
                    " fields, expected " + std::to_string(width));
  }
  return table;
}

DataTable read_table(const std::filesystem::path& path,
                     const CleanConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), config);
}

ValidityMask table_to_mask(const DataTable& table, const CleanConfig& config) {
  config.validate();
  const std::unordered_set<std::string> tokens(config.missing_tokens.begin(),
                                               config.missing_tokens.end());
  MaskBuilder builder(table.rows(), table.cols());
  for (int i = 0; i < table.rows(); ++i) {
    const auto& row = table.cells[i];
    for (int j = 0; j < table.cols(); ++j) {
      builder.set_valid(i, j, !tokens.contains(std::string(trim(row[j]))));
    }
  }
  builder.set_row_labels(table.row_ids);
  if (!table.header.empty()) {
    std::vector<std::string> labels(
        table.header.begin() + (config.has_row_ids ? 1 : 0),
        table.header.end());
    builder.set_col_labels(std::move(labels));
  }
  return std::move(builder).build();
}

ValidityMask load_matrix(const std::filesystem::path& path,
                         const CleanConfig& config) {
  return table_to_mask(read_table(path, config), config);
}

std::pair<ValidityMask, bool> orient(const ValidityMask& mask) {
  if (mask.rows() > mask.cols()) return {mask.transposed(), true};
  return {mask, false};
}

void write_selection(const DataTable& table, const CleanConfig& config,
                     const Selection& sel, std::ostream& out) {
  for (const int i : sel.kept_rows) {
    if (i < 0 || i >= table.rows()) {
      throw DataError("selection row " + std::to_string(i) +
                      " out of range for " + std::to_string(table.rows()) +
                      " rows");
    }
  }
  for (const int j : sel.kept_cols) {
    if (j < 0 || j >= table.cols()) {
      throw DataError("selection column " + std::to_string(j) +
                      " out of range for " + std::to_string(table.cols()) +
                      " columns");
    }
  }
  const char d = config.delimiter;
  const int offset = config.has_row_ids ? 1 : 0;
  const auto write_line = [&](const std::string* id,
                              const std::vector<std::string>& fields,
                              int shift) {
    bool first = true;
    if (id != nullptr) {
      out << *id;
      first = false;
    }
    for (const int j : sel.kept_cols) {
      if (!first) out << d;
      out << fields[j + shift];
      first = false;
    }
    out << '\n';
  };
  if (config.has_header) {
    write_line(config.has_row_ids ? &table.header[0] : nullptr, table.header,
               offset);
  }
  for (const int i : sel.kept_rows) {
    write_line(config.has_row_ids ? &table.row_ids[i] : nullptr,
               table.cells[i], 0);
  }
}

void apply_selection(const std::filesystem::path& path,
                     const CleanConfig& config, const Selection& sel,
                     const std::filesystem::path& output) {
  const DataTable table = read_table(path, config);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw DataError("cannot write " + output.string());
  write_selection(table, config, sel, out);
  if (!out) throw DataError("write failed for " + output.string());
}

}  // namespace nomiss
