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

#ifndef NOMISS_ROWCOL_H_
#define NOMISS_ROWCOL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "nomiss/rational.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

// Bipartite graph with one node per row (weight alpha_i) and per column
// (weight beta_j) and one edge per missing cell. A row and a column joined
// by an edge cannot both be kept when no missing data is allowed.
struct ConflictGraph {
  std::vector<std::int64_t> row_weight;
  std::vector<std::int64_t> col_weight;
  std::vector<std::pair<int, int>> edges;  // (row, column), row-major order

  int rows() const { return static_cast<int>(row_weight.size()); }
  int cols() const { return static_cast<int>(col_weight.size()); }
};

ConflictGraph build_conflict_graph(const ValidityMask& mask);

struct RowColSolution {
  // objective is the recounted number of valid kept cells, not the weight.
  Selection selection;
  // sum of alpha over kept rows + sum of beta over kept columns.
  std::int64_t weight = 0;
  // Weight of the dropped nodes; equals the minimum cut capacity.
  std::int64_t cut = 0;
};

// Maximum-weight independent set of the conflict graph via a minimum s-t
// cut: source -> row (alpha_i), column -> sink (beta_j), row -> column with a
// capacity larger than every finite cut for each missing cell. Rows on the
// source side and columns on the sink side of the cut closest to the source
// are kept. Exact for any mask; any optimum may be returned.
RowColSolution solve_rowcol_nomiss(const ValidityMask& mask);

// CPLEX LP text of the row/column integer program: maximize
// sum alpha_i r_i + sum beta_j c_j subject to, for every row,
//   r_i + sum_j ((1 - b_ij - gamma) / n) c_j <= 1
// and the symmetric column constraints, all variables binary.
// Coefficients are exact decimals rounded to 15 significant digits.
std::string export_rowcol_ip(const ValidityMask& mask, const Ratio& gamma);

// CPLEX LP text of the element integer program: maximize sum b_ij x_ij with
// x_ij - 0.5 r_i - 0.5 c_j <= 0 for every cell plus the row/column
// constraints of export_rowcol_ip(); m + n + m*n binaries.
std::string export_element_ip(const ValidityMask& mask, const Ratio& gamma);

void write_model(const std::filesystem::path& path, const std::string& text);

}  // namespace nomiss

#endif  // NOMISS_ROWCOL_H_
