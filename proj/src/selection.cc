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

#include "nomiss/selection.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nomiss {

namespace {

std::vector<Word> column_filter(const ValidityMask& mask,
                                const std::vector<int>& cols) {
  std::vector<Word> filter(mask.words_per_row(), 0);
  for (const int j : cols) filter[j / kWordBits] |= Word{1} << (j % kWordBits);
  return filter;
}

std::vector<Word> row_filter(const ValidityMask& mask,
                             const std::vector<int>& rows) {
  std::vector<Word> filter(mask.words_per_col(), 0);
  for (const int i : rows) filter[i / kWordBits] |= Word{1} << (i % kWordBits);
  return filter;
}

std::int64_t masked_popcount(std::span<const Word> bits,
                             const std::vector<Word>& filter) {
  std::int64_t total = 0;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    total += std::popcount(bits[w] & filter[w]);
  }
  return total;
}

void normalize(std::vector<int>& idx, int bound, const char* what) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (!idx.empty() && (idx.front() < 0 || idx.back() >= bound)) {
    throw std::out_of_range(std::string(what) + " index out of range");
  }
}

}  // namespace

std::int64_t count_retained(const ValidityMask& mask,
                            const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  if (rows.empty() || cols.empty()) return 0;
  const auto filter = column_filter(mask, cols);
  std::int64_t total = 0;
  for (const int i : rows) total += masked_popcount(mask.row_bits(i), filter);
  return total;
}

Selection make_selection(const ValidityMask& mask, std::vector<int> rows,
                         std::vector<int> cols, std::string algorithm) {
  normalize(rows, mask.rows(), "row");
  normalize(cols, mask.cols(), "column");
  Selection sel;
  sel.objective = count_retained(mask, rows, cols);
  sel.kept_rows = std::move(rows);
  sel.kept_cols = std::move(cols);
  sel.algorithm = std::move(algorithm);
  return sel;
}

Selection select_all(const ValidityMask& mask, std::string algorithm) {
  std::vector<int> rows(mask.rows());
  std::vector<int> cols(mask.cols());
  for (int i = 0; i < mask.rows(); ++i) rows[i] = i;
  for (int j = 0; j < mask.cols(); ++j) cols[j] = j;
  Selection sel;
  sel.kept_rows = std::move(rows);
  sel.kept_cols = std::move(cols);
  sel.objective = mask.total_valid();
  sel.algorithm = std::move(algorithm);
  return sel;
}

Selection map_to_original(Selection sel, bool transposed) {
  if (transposed) std::swap(sel.kept_rows, sel.kept_cols);
  return sel;
}

std::vector<int> indices_where(const std::vector<bool>& keep) {
  std::vector<int> out;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<Violation> feasibility_check(const ValidityMask& mask,
                                         const Selection& sel,
                                         const Ratio& gamma) {
  std::vector<Violation> out;
  const std::int64_t n_rows = static_cast<std::int64_t>(sel.kept_rows.size());
  const std::int64_t n_cols = static_cast<std::int64_t>(sel.kept_cols.size());
  if (n_rows == 0 || n_cols == 0) return out;
  const auto cols = column_filter(mask, sel.kept_cols);
  for (const int i : sel.kept_rows) {
    const std::int64_t missing =
        n_cols - masked_popcount(mask.row_bits(i), cols);
    if (gamma.exceeded_by(missing, n_cols)) {
      out.push_back({Violation::Axis::kRow, i, missing, n_cols});
    }
  }
  const auto rows = row_filter(mask, sel.kept_rows);
  for (const int j : sel.kept_cols) {
    const std::int64_t missing =
        n_rows - masked_popcount(mask.col_bits(j), rows);
    if (gamma.exceeded_by(missing, n_rows)) {
      out.push_back({Violation::Axis::kColumn, j, missing, n_rows});
    }
  }
  return out;
}

}  // namespace nomiss
