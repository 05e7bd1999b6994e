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

// Exact maximum all-valid submatrix.
//
// The search space is partitioned by R, the number of kept rows. Within a
// partition the best solution keeps every column that is valid on all chosen
// rows, so each partition reduces to "choose R rows maximizing the size of the
// intersection of their valid columns". Partitions are shrunk before search:
//
//   * columns with fewer than R valid cells cannot be kept;
//   * an improving solution needs minC = floor(obj* / R) + 1 columns, so rows
//     with fewer than minC valid cells are dropped;
//   * a row sharing minC valid columns with fewer than R - 1 other rows is
//     dropped (iterated to a fixed point);
//   * a partition whose survivors cannot supply R rows or minC columns, or
//     with minC > n, is skipped.
//
// The surviving rows are searched depth-first, keeping the running column
// intersection as a bitset. All partitions share one monotone incumbent.

#ifndef NOMISS_MAXCOL_H_
#define NOMISS_MAXCOL_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nomiss/greedy.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

// Each reduction can be disabled on its own; the optimum never depends on
// them, only the amount of search does.
struct PruningRules {
  bool column_filter = true;
  bool row_filter = true;
  bool pair_pruning = true;
  bool skip_rules = true;
  // Branch-and-bound bound: with e rows of the remaining candidate list still
  // droppable, a column outside the current intersection's always-valid part
  // survives only if all of its missing rows are among the dropped ones.
  // Charging each such column 1/|missing rows| to each of its missing rows
  // bounds the survivors by the sum of the e largest row charges.
  bool exclusion_bound = true;
};

// floor(obj / rows_target) + 1. Throws std::invalid_argument when
// rows_target < 1.
std::int64_t min_columns(std::int64_t incumbent_objective, int rows_target);

struct SubProblem {
  enum class Status { kReady, kSkipped };

  int rows_target = 0;        // R
  std::int64_t min_cols = 0;  // minC
  std::vector<int> candidate_rows;
  std::vector<int> candidate_cols;
  Status status = Status::kReady;
  std::string skip_reason;  // "minC>n", "rows", "cols" or "pairs"

  bool ready() const { return status == Status::kReady; }
};

// Best known solution, shared between workers. The objective only ever
// increases and can be read without locking.
class Incumbent {
 public:
  explicit Incumbent(Selection initial);

  std::int64_t objective() const {
    return objective_.load(std::memory_order_acquire);
  }
  // Installs `candidate` iff its objective is strictly larger.
  bool try_improve(Selection candidate);

  Selection best() const;
  // Objective after every successful improvement, starting with the
  // initial one.
  std::vector<std::int64_t> history() const;

 private:
  mutable std::mutex mu_;
  std::atomic<std::int64_t> objective_;
  Selection best_;
  std::vector<std::int64_t> history_;
};

// Cooperative cancellation for long searches.
class SearchControl {
 public:
  SearchControl() = default;
  explicit SearchControl(std::chrono::steady_clock::time_point deadline)
      : deadline_(deadline) {}

  // Polls the clock every few hundred calls.
  bool should_stop();
  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  void request_stop() { stopped_.store(true, std::memory_order_relaxed); }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<bool> stopped_{false};
  std::atomic<std::uint32_t> polls_{0};
};

SubProblem prepare_subproblem(const ValidityMask& mask, int rows_target,
                              std::int64_t incumbent_objective,
                              const PruningRules& rules = {});

// Applies the row-pair rule until no further row is removed.
SubProblem row_pair_prune(SubProblem sub, const ValidityMask& mask,
                          const PruningRules& rules = {});

// Depth-first search for R candidate rows whose common valid candidate
// columns beat the incumbent. Improvements are pushed into `incumbent` as
// they are found; the best one from this call is returned. `complete` (when
// given) reports whether the search ran to the end.
std::optional<Selection> solve_subproblem(const SubProblem& sub,
                                          const ValidityMask& mask,
                                          Incumbent& incumbent,
                                          const PruningRules& rules = {},
                                          SearchControl* control = nullptr,
                                          bool* complete = nullptr);

struct MaxColOptions {
  // Must be free of missing cells. Defaults to combined_greedy().
  std::optional<Selection> warm_start;
  int workers = 1;
  // Ascending R on one worker, so the returned selection is reproducible.
  bool deterministic = false;
  std::optional<std::chrono::duration<double>> time_budget;
  PruningRules rules;
  int similarity_window = kDefaultSimilarityWindow;
};

struct MaxColResult {
  Selection selection;
  bool proven_optimal = false;
  std::vector<std::int64_t> incumbent_history;
  int subproblems_searched = 0;
  int subproblems_skipped = 0;
};

MaxColResult solve_maxcol(const ValidityMask& mask,
                          const MaxColOptions& options = {});

}  // namespace nomiss

#endif  // NOMISS_MAXCOL_H_
