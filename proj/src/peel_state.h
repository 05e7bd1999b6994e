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

#ifndef NOMISS_SRC_PEEL_STATE_H_
#define NOMISS_SRC_PEEL_STATE_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nomiss/missing_index.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss::internal {

// Kept cross-section of a mask that only ever shrinks, with live missing
// counts per line. Missing counts change only at missing cells, so a removal
// costs O(missing cells on the removed line * log).
class PeelState {
 public:
  struct Line {
    bool is_row;
    int index;
    std::int64_t missing;
    std::int64_t total;  // kept lines on the crossing axis
  };

  PeelState(const ValidityMask& mask, const MissingIndex& index);

  int kept_rows() const { return kept_rows_; }
  int kept_cols() const { return kept_cols_; }
  std::int64_t kept_missing() const { return kept_missing_; }
  bool row_kept(int i) const { return row_kept_[i]; }
  bool col_kept(int j) const { return col_kept_[j]; }
  int row_missing(int i) const { return row_missing_[i]; }
  int col_missing(int j) const { return col_missing_[j]; }
  int row_valid(int i) const { return kept_cols_ - row_missing_[i]; }
  int col_valid(int j) const { return kept_rows_ - col_missing_[j]; }

  // Kept line with the largest missing fraction. Rows win ties against
  // columns, then the lowest index. Empty when no cell is kept.
  std::optional<Line> worst_line() const;

  void remove_row(int i);
  void remove_col(int j);

  Selection to_selection(const ValidityMask& mask, std::string algorithm) const;

 private:
  const MissingIndex& index_;
  std::vector<bool> row_kept_;
  std::vector<bool> col_kept_;
  std::vector<int> row_missing_;
  std::vector<int> col_missing_;
  int kept_rows_;
  int kept_cols_;
  std::int64_t kept_missing_;
  // (-missing, index): begin() is the worst line of each axis.
  std::set<std::pair<int, int>> row_order_;
  std::set<std::pair<int, int>> col_order_;
};

}  // namespace nomiss::internal

#endif  // NOMISS_SRC_PEEL_STATE_H_
