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

#include "peel_state.h"

#include <bit>

namespace nomiss {

MissingIndex::MissingIndex(const ValidityMask& mask)
    : by_row(mask.rows()), by_col(mask.cols()) {
  for (int i = 0; i < mask.rows(); ++i) {
    by_row[i].reserve(mask.row_missing(i));
    const auto bits = mask.row_bits(i);
    for (std::size_t w = 0; w < bits.size(); ++w) {
      Word missing = ~bits[w];
      const int base = static_cast<int>(w) * kWordBits;
      if (base + kWordBits > mask.cols()) {
        const int tail = mask.cols() - base;
        missing &= (Word{1} << tail) - 1;
      }
      while (missing != 0) {
        const int j = base + std::countr_zero(missing);
        missing &= missing - 1;
        by_row[i].push_back(j);
        by_col[j].push_back(i);
      }
    }
  }
}

namespace internal {

PeelState::PeelState(const ValidityMask& mask, const MissingIndex& index)
    : index_(index),
      row_kept_(mask.rows(), true),
      col_kept_(mask.cols(), true),
      row_missing_(mask.rows()),
      col_missing_(mask.cols()),
      kept_rows_(mask.rows()),
      kept_cols_(mask.cols()),
      kept_missing_(mask.total_missing()) {
  for (int i = 0; i < mask.rows(); ++i) {
    row_missing_[i] = mask.row_missing(i);
    row_order_.emplace(-row_missing_[i], i);
  }
  for (int j = 0; j < mask.cols(); ++j) {
    col_missing_[j] = mask.col_missing(j);
    col_order_.emplace(-col_missing_[j], j);
  }
}

std::optional<PeelState::Line> PeelState::worst_line() const {
  if (kept_rows_ == 0 || kept_cols_ == 0) return std::nullopt;
  const auto [neg_rm, ri] = *row_order_.begin();
  const auto [neg_cm, cj] = *col_order_.begin();
  const std::int64_t rm = -neg_rm;
  const std::int64_t cm = -neg_cm;
  // rm / kept_cols >= cm / kept_rows
  if (rm * kept_rows_ >= cm * kept_cols_) {
    return Line{true, ri, rm, kept_cols_};
  }
  return Line{false, cj, cm, kept_rows_};
}

void PeelState::remove_row(int i) {
  if (!row_kept_[i]) return;
  row_kept_[i] = false;
  --kept_rows_;
  kept_missing_ -= row_missing_[i];
  row_order_.erase({-row_missing_[i], i});
  for (const int j : index_.by_row[i]) {
    if (!col_kept_[j]) continue;
    col_order_.erase({-col_missing_[j], j});
    --col_missing_[j];
    col_order_.emplace(-col_missing_[j], j);
  }
}

void PeelState::remove_col(int j) {
  if (!col_kept_[j]) return;
  col_kept_[j] = false;
  --kept_cols_;
  kept_missing_ -= col_missing_[j];
  col_order_.erase({-col_missing_[j], j});
  for (const int i : index_.by_col[j]) {
    if (!row_kept_[i]) continue;
    row_order_.erase({-row_missing_[i], i});
    --row_missing_[i];
    row_order_.emplace(-row_missing_[i], i);
  }
}

Selection PeelState::to_selection(const ValidityMask& mask,
                                  std::string algorithm) const {
  return make_selection(mask, indices_where(row_kept_),
                        indices_where(col_kept_), std::move(algorithm));
}

}  // namespace internal
}  // namespace nomiss
