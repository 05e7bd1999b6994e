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

#include "nomiss/validity_mask.h"

#include <stdexcept>
#include <utility>

namespace nomiss {

MaskBuilder::MaskBuilder(int rows, int cols)
    : rows_(rows), cols_(cols), row_words_(words_for(cols > 0 ? cols : 0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
  bits_.assign(static_cast<std::size_t>(rows) * row_words_, 0);
}

void MaskBuilder::set_valid(int row, int col, bool valid) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("cell outside mask");
  }
  Word& w = bits_[row * row_words_ + col / kWordBits];
  const Word bit = Word{1} << (col % kWordBits);
  if (valid) {
    w |= bit;
  } else {
    w &= ~bit;
  }
}

void MaskBuilder::set_row_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(rows_)) {
    throw std::invalid_argument("row label count does not match rows");
  }
  row_labels_ = std::move(labels);
}

void MaskBuilder::set_col_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(cols_)) {
    throw std::invalid_argument("column label count does not match columns");
  }
  col_labels_ = std::move(labels);
}

ValidityMask MaskBuilder::build() && {
  ValidityMask mask;
  mask.rows_ = rows_;
  mask.cols_ = cols_;
  mask.row_words_ = row_words_;
  mask.col_words_ = words_for(rows_);
  mask.row_bits_ = std::move(bits_);
  mask.col_bits_.assign(static_cast<std::size_t>(cols_) * mask.col_words_, 0);
  mask.alpha_.assign(rows_, 0);
  mask.beta_.assign(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    const auto bits = mask.row_bits(i);
    mask.alpha_[i] = static_cast<int>(popcount(bits));
    mask.total_valid_ += mask.alpha_[i];
    for (std::size_t w = 0; w < bits.size(); ++w) {
      Word word = bits[w];
      while (word != 0) {
        const int j = static_cast<int>(w * kWordBits) + std::countr_zero(word);
        word &= word - 1;
        mask.col_bits_[j * mask.col_words_ + i / kWordBits] |=
            Word{1} << (i % kWordBits);
        ++mask.beta_[j];
      }
    }
  }
  mask.row_labels_ = std::move(row_labels_);
  mask.col_labels_ = std::move(col_labels_);
  return mask;
}

ValidityMask ValidityMask::from_pattern(
    std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_pattern(copy);
}

ValidityMask ValidityMask::from_pattern(const std::vector<std::string>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  MaskBuilder builder(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("ragged mask pattern");
    }
    for (int j = 0; j < n; ++j) {
      const char c = rows[i][j];
      builder.set_valid(i, j, c == '1' || c == 'T' || c == 'x' || c == '#');
    }
  }
  return std::move(builder).build();
}

ValidityMask ValidityMask::transposed() const {
  ValidityMask t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.row_words_ = col_words_;
  t.col_words_ = row_words_;
  t.row_bits_ = col_bits_;
  t.col_bits_ = row_bits_;
  t.alpha_ = beta_;
  t.beta_ = alpha_;
  t.total_valid_ = total_valid_;
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

std::string ValidityMask::to_pattern() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.push_back(valid(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace nomiss
