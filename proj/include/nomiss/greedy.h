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

#ifndef NOMISS_GREEDY_H_
#define NOMISS_GREEDY_H_

#include "nomiss/rational.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

inline constexpr int kDefaultSimilarityWindow = 3;

// Repeatedly picks the kept line (row or column) with the largest missing
// fraction over the kept cross-section and either drops it or drops the k
// crossing lines that hold its surplus missing cells, whichever side loses
// fewer valid cells. Stops once no kept line exceeds gamma.
//
// Ties: among lines at the maximum fraction rows win over columns, then the
// lowest index. When the two sides hold equally many valid cells the column
// side is removed.
Selection mrclean_greedy(const ValidityMask& mask, const Ratio& gamma);

// Grows an all-valid submatrix one row at a time, starting from every column
// and no row. Each step adds the unused row with the most valid cells in the
// kept columns and drops the columns where it is missing; the best
// rows x columns snapshot over all steps is returned.
//
// Rows tied at the maximum are ranked by how many missing cells their column
// removals would clear among rows within `similarity_window` valid cells of
// the maximum (inclusive); the most wins, then the lowest index.
Selection nomiss_greedy(const ValidityMask& mask,
                        int similarity_window = kDefaultSimilarityWindow);

// Better of mrclean_greedy(mask, 0) and nomiss_greedy(mask); ties go to the
// latter.
Selection combined_greedy(const ValidityMask& mask,
                          int similarity_window = kDefaultSimilarityWindow);

}  // namespace nomiss

#endif  // NOMISS_GREEDY_H_
