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

#ifndef NOMISS_VALIDITY_MASK_H_
#define NOMISS_VALIDITY_MASK_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nomiss {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline std::int64_t popcount(std::span<const Word> words) {
  std::int64_t total = 0;
  for (const Word w : words) total += std::popcount(w);
  return total;
}

class ValidityMask;

// Mutable staging area for a mask. Cells start out missing.
class MaskBuilder {
 public:
  MaskBuilder(int rows, int cols);

  void set_valid(int row, int col, bool valid = true);
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  ValidityMask build() &&;

 private:
  friend class ValidityMask;
  int rows_;
  int cols_;
  std::size_t row_words_;
  std::vector<Word> bits_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Immutable m x n validity matrix. Bits are packed per row (and mirrored per
// column) so that intersections of rows reduce to word-wise AND + popcount.
// Row valid counts (alpha), column valid counts (beta) and row missing counts
// (lambda) are cached at construction.
class ValidityMask {
 public:
  // Each string is one row; '1', 'T', 'x' or '#' mark valid cells, anything
  // else is missing. Rows must have equal length.
  static ValidityMask from_pattern(std::initializer_list<std::string_view> rows);
  static ValidityMask from_pattern(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t cells() const {
    return static_cast<std::int64_t>(rows_) * cols_;
  }

  bool valid(int row, int col) const {
    return (row_bits_[row * row_words_ + col / kWordBits] >>
            (col % kWordBits)) & 1U;
  }

  int row_valid(int row) const { return alpha_[row]; }
  int col_valid(int col) const { return beta_[col]; }
  int row_missing(int row) const { return cols_ - alpha_[row]; }
  int col_missing(int col) const { return rows_ - beta_[col]; }
  const std::vector<int>& row_valid_counts() const { return alpha_; }
  const std::vector<int>& col_valid_counts() const { return beta_; }

  std::int64_t total_valid() const { return total_valid_; }
  std::int64_t total_missing() const { return cells() - total_valid_; }

  std::size_t words_per_row() const { return row_words_; }
  std::size_t words_per_col() const { return col_words_; }
  // Bit j set iff cell (row, j) is valid. Padding bits are zero.
  std::span<const Word> row_bits(int row) const {
    return {row_bits_.data() + row * row_words_, row_words_};
  }
  // Bit i set iff cell (i, col) is valid. Padding bits are zero.
  std::span<const Word> col_bits(int col) const {
    return {col_bits_.data() + col * col_words_, col_words_};
  }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  ValidityMask transposed() const;

  // Row-major '1'/'0' rendering, one line per row.
  std::string to_pattern() const;

  friend bool operator==(const ValidityMask& a, const ValidityMask& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.row_bits_ == b.row_bits_;
  }

 private:
  friend class MaskBuilder;
  ValidityMask() = default;

  int rows_ = 0;
  int cols_ = 0;
  std::size_t row_words_ = 0;
  std::size_t col_words_ = 0;
  std::vector<Word> row_bits_;
  std::vector<Word> col_bits_;
  std::vector<int> alpha_;
  std::vector<int> beta_;
  std::int64_t total_valid_ = 0;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

}  // namespace nomiss

#endif  // NOMISS_VALIDITY_MASK_H_
