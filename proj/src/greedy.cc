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

#include "nomiss/greedy.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "nomiss/missing_index.h"
#include "peel_state.h"

namespace nomiss {

namespace {

// Smallest k with (missing - k) / (total - k) <= gamma.
std::int64_t surplus_missing(std::int64_t missing, std::int64_t total,
                             const Ratio& gamma) {
  const __int128 excess = static_cast<__int128>(missing) * gamma.den() -
                          static_cast<__int128>(gamma.num()) * total;
  if (excess <= 0) return 0;
  const __int128 step = gamma.den() - gamma.num();
  return static_cast<std::int64_t>((excess + step - 1) / step);
}

// The k crossing lines holding missing cells of the selected line that have
// the fewest valid cells, and their summed valid count.
struct Crossing {
  std::vector<int> lines;
  std::int64_t valid = 0;
};

template <typename IsKept, typename ValidOf>
Crossing cheapest_crossing(const std::vector<int>& missing_at, std::int64_t k,
                           IsKept is_kept, ValidOf valid_of) {
  std::vector<std::pair<int, int>> candidates;  // (valid, index)
  for (const int x : missing_at) {
    if (is_kept(x)) candidates.emplace_back(valid_of(x), x);
  }
  const auto take = std::min<std::size_t>(k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + take,
                    candidates.end());
  Crossing out;
  for (std::size_t t = 0; t < take; ++t) {
    out.lines.push_back(candidates[t].second);
    out.valid += candidates[t].first;
  }
  return out;
}

}  // namespace

Selection mrclean_greedy(const ValidityMask& mask, const Ratio& gamma) {
  if (gamma.num() >= gamma.den()) {
    throw std::invalid_argument("gamma must lie in [0, 1)");
  }
  const MissingIndex index(mask);
  internal::PeelState state(mask, index);
  while (true) {
    const auto worst = state.worst_line();
    if (!worst || !gamma.exceeded_by(worst->missing, worst->total)) break;
    const std::int64_t k = surplus_missing(worst->missing, worst->total, gamma);
    if (worst->is_row) {
      const int i = worst->index;
      const Crossing cols = cheapest_crossing(
          index.by_row[i], k, [&](int j) { return state.col_kept(j); },
          [&](int j) { return state.col_valid(j); });
      if (state.row_valid(i) >= cols.valid) {
        for (const int j : cols.lines) state.remove_col(j);
      } else {
        state.remove_row(i);
      }
    } else {
      const int j = worst->index;
      const Crossing rows = cheapest_crossing(
          index.by_col[j], k, [&](int i) { return state.row_kept(i); },
          [&](int i) { return state.row_valid(i); });
      if (state.col_valid(j) > rows.valid) {
        for (const int i : rows.lines) state.remove_row(i);
      } else {
        state.remove_col(j);
      }
    }
  }
  return state.to_selection(mask, "mrclean-greedy");
}

Selection nomiss_greedy(const ValidityMask& mask, int similarity_window) {
  if (similarity_window < 0) {
    throw std::invalid_argument("similarity window must be non-negative");
  }
  const int m = mask.rows();
  const int n = mask.cols();
  const MissingIndex index(mask);

  std::vector<bool> added(m, false);
  std::vector<bool> col_kept(n, true);
  std::vector<int> live_missing(m);
  for (int i = 0; i < m; ++i) live_missing[i] = mask.row_missing(i);
  constexpr int kNever = std::numeric_limits<int>::max();
  std::vector<int> removed_at(n, kNever);
  std::vector<int> order;
  order.reserve(m);
  int kept_cols = n;

  std::int64_t best_objective = 0;
  int best_step = -1;
  std::vector<int> tied;
  std::vector<bool> similar(m, false);

  for (int step = 0; step < m; ++step) {
    int max_valid = -1;
    tied.clear();
    for (int i = 0; i < m; ++i) {
      if (added[i]) continue;
      const int valid = kept_cols - live_missing[i];
      if (valid > max_valid) {
        max_valid = valid;
        tied.assign(1, i);
      } else if (valid == max_valid) {
        tied.push_back(i);
      }
    }

    int chosen = tied.front();
    if (tied.size() > 1) {
      for (int i = 0; i < m; ++i) {
        similar[i] =
            !added[i] && kept_cols - live_missing[i] >= max_valid - similarity_window;
      }
      std::int64_t best_cleared = -1;
      for (const int t : tied) {
        std::int64_t cleared = 0;
        for (const int j : index.by_row[t]) {
          if (!col_kept[j]) continue;
          for (const int r : index.by_col[j]) cleared += similar[r] ? 1 : 0;
        }
        if (cleared > best_cleared) {
          best_cleared = cleared;
          chosen = t;
        }
      }
    }

    added[chosen] = true;
    order.push_back(chosen);
    for (const int j : index.by_row[chosen]) {
      if (!col_kept[j]) continue;
      col_kept[j] = false;
      removed_at[j] = step;
      --kept_cols;
      for (const int r : index.by_col[j]) --live_missing[r];
    }
    const std::int64_t objective =
        static_cast<std::int64_t>(step + 1) * kept_cols;
    if (objective > best_objective) {
      best_objective = objective;
      best_step = step;
    }
  }

  std::vector<int> rows;
  std::vector<int> cols;
  if (best_step >= 0) {
    rows.assign(order.begin(), order.begin() + best_step + 1);
    for (int j = 0; j < n; ++j) {
      if (removed_at[j] > best_step) cols.push_back(j);
    }
  }
  return make_selection(mask, std::move(rows), std::move(cols),
                        "nomiss-greedy");
}

Selection combined_greedy(const ValidityMask& mask, int similarity_window) {
  Selection mrclean = mrclean_greedy(mask, Ratio::zero());
  Selection nomiss = nomiss_greedy(mask, similarity_window);
  Selection& best = mrclean.objective > nomiss.objective ? mrclean : nomiss;
  best.algorithm = "combined";
  return std::move(best);
}

}  // namespace nomiss
