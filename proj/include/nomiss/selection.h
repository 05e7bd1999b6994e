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

#ifndef NOMISS_SELECTION_H_
#define NOMISS_SELECTION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nomiss/rational.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

// Kept rows and columns of a mask. Index lists are sorted and unique.
// objective is the number of valid cells in the kept cross-section and is
// always recounted from the mask by make_selection().
struct Selection {
  std::vector<int> kept_rows;
  std::vector<int> kept_cols;
  std::int64_t objective = 0;
  std::string algorithm;
};

// Valid cells in rows x cols. Indices must be in range.
std::int64_t count_retained(const ValidityMask& mask,
                            const std::vector<int>& rows,
                            const std::vector<int>& cols);

// Sorts and dedups the index lists, checks bounds (std::out_of_range) and
// recounts the objective.
Selection make_selection(const ValidityMask& mask, std::vector<int> rows,
                         std::vector<int> cols, std::string algorithm);

Selection select_all(const ValidityMask& mask, std::string algorithm);

// Swaps the row and column sides when the mask was transposed.
Selection map_to_original(Selection sel, bool transposed);

// Positions whose flag is set, in increasing order.
std::vector<int> indices_where(const std::vector<bool>& keep);

struct Violation {
  enum class Axis { kRow, kColumn };
  Axis axis;
  int index;
  std::int64_t missing;
  std::int64_t total;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every kept row and column whose missing fraction over the kept
// cross-section exceeds gamma. Rows first, each side in index order.
std::vector<Violation> feasibility_check(const ValidityMask& mask,
                                         const Selection& sel,
                                         const Ratio& gamma);

}  // namespace nomiss

#endif  // NOMISS_SELECTION_H_
