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

#ifndef NOMISS_MATRIX_IO_H_
#define NOMISS_MATRIX_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomiss/rational.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

struct CleanConfig {
  Ratio gamma;
  // Compared against each cell after trimming ASCII whitespace, exactly and
  // case-sensitively. "" makes blank cells missing.
  std::vector<std::string> missing_tokens = {"NA", "", "?"};
  bool has_header = false;
  bool has_row_ids = false;
  char delimiter = ',';

  // Throws UsageError when gamma >= 1 or the token list is empty.
  void validate() const;
};

// Raw cell text of a delimited file, split but otherwise untouched.
struct DataTable {
  // Header fields including the row-id corner cell when present.
  std::vector<std::string> header;
  std::vector<std::string> row_ids;
  // cells[i] holds the data fields of row i (row id excluded).
  std::vector<std::vector<std::string>> cells;

  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }
};

// Throws DataError on ragged rows (with the 1-based line number) and on
// input with zero data rows or zero data columns.
DataTable parse_table(std::string_view text, const CleanConfig& config);
DataTable read_table(const std::filesystem::path& path,
                     const CleanConfig& config);

ValidityMask table_to_mask(const DataTable& table, const CleanConfig& config);

ValidityMask load_matrix(const std::filesystem::path& path,
                         const CleanConfig& config);

// Transposes when rows > cols so the returned mask never has more rows than
// columns. The flag reports whether a transpose happened.
std::pair<ValidityMask, bool> orient(const ValidityMask& mask);

// Writes the kept submatrix in the input's own format: same delimiter,
// header and row ids, original cell text, original row and column order.
// Selection indices refer to the file's (un-oriented) shape.
void write_selection(const DataTable& table, const CleanConfig& config,
                     const Selection& sel, std::ostream& out);

void apply_selection(const std::filesystem::path& path,
                     const CleanConfig& config, const Selection& sel,
                     const std::filesystem::path& output);

}  // namespace nomiss

#endif  // NOMISS_MATRIX_IO_H_
