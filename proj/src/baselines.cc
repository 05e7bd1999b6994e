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

#include "nomiss/baselines.h"

#include <stdexcept>
#include <vector>

#include "nomiss/missing_index.h"
#include "peel_state.h"

namespace nomiss {

Selection listwise(const ValidityMask& mask) {
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < mask.rows(); ++i) {
    if (mask.row_missing(i) == 0) rows.push_back(i);
  }
  for (int j = 0; j < mask.cols(); ++j) cols.push_back(j);
  return make_selection(mask, std::move(rows), std::move(cols), "listwise");
}

Selection featurewise(const ValidityMask& mask) {
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < mask.rows(); ++i) rows.push_back(i);
  for (int j = 0; j < mask.cols(); ++j) {
    if (mask.col_missing(j) == 0) cols.push_back(j);
  }
  return make_selection(mask, std::move(rows), std::move(cols), "featurewise");
}

Selection naive(const ValidityMask& mask, const Ratio& gamma) {
  if (gamma.num() >= gamma.den()) {
    throw std::invalid_argument("gamma must lie in [0, 1)");
  }
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < mask.rows(); ++i) {
    if (!gamma.exceeded_by(mask.row_missing(i), mask.cols())) rows.push_back(i);
  }
  for (int j = 0; j < mask.cols(); ++j) {
    if (!gamma.exceeded_by(mask.col_missing(j), mask.rows())) cols.push_back(j);
  }
  return make_selection(mask, std::move(rows), std::move(cols), "naive");
}

Selection automiss(const ValidityMask& mask, const Ratio& tau) {
  if (tau.num() >= tau.den()) {
    throw std::invalid_argument("tau must lie in [0, 1)");
  }
  const MissingIndex index(mask);
  internal::PeelState state(mask, index);
  while (true) {
    const std::int64_t cells =
        static_cast<std::int64_t>(state.kept_rows()) * state.kept_cols();
    if (!tau.exceeded_by(state.kept_missing(), cells)) break;
    const auto worst = state.worst_line();
    if (!worst) break;
    if (worst->is_row) {
      state.remove_row(worst->index);
    } else {
      state.remove_col(worst->index);
    }
  }
  return state.to_selection(mask, "automiss");
}

}  // namespace nomiss
