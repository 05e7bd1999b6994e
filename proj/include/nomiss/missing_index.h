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

#ifndef NOMISS_MISSING_INDEX_H_
#define NOMISS_MISSING_INDEX_H_

#include <vector>

#include "nomiss/validity_mask.h"

namespace nomiss {

// Adjacency lists of the missing cells: by_row[i] lists the columns where row
// i is missing, by_col[j] the rows where column j is missing. Both ascending.
struct MissingIndex {
  std::vector<std::vector<int>> by_row;
  std::vector<std::vector<int>> by_col;

  explicit MissingIndex(const ValidityMask& mask);
};

}  // namespace nomiss

#endif  // NOMISS_MISSING_INDEX_H_
