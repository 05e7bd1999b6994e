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

#include "nomiss/maxcol.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <thread>
#include <utility>

namespace nomiss {

std::int64_t min_columns(std::int64_t incumbent_objective, int rows_target) {
  if (rows_target < 1) {
    throw std::invalid_argument("min_columns: row target must be >= 1");
  }
  if (incumbent_objective < 0) {
    throw std::invalid_argument("min_columns: negative objective");
  }
  return incumbent_objective / rows_target + 1;
}

Incumbent::Incumbent(Selection initial)
    : objective_(initial.objective), best_(std::move(initial)) {
  history_.push_back(best_.objective);
}

bool Incumbent::try_improve(Selection candidate) {
  if (candidate.objective <= objective()) return false;
  std::lock_guard lock(mu_);
  if (candidate.objective <= best_.objective) return false;
  best_ = std::move(candidate);
  history_.push_back(best_.objective);
  objective_.store(best_.objective, std::memory_order_release);
  return true;
}

Selection Incumbent::best() const {
  std::lock_guard lock(mu_);
  return best_;
}

std::vector<std::int64_t> Incumbent::history() const {
  std::lock_guard lock(mu_);
  return history_;
}

bool SearchControl::should_stop() {
  if (stopped()) return true;
  if (!deadline_) return false;
  if ((polls_.fetch_add(1, std::memory_order_relaxed) & 255U) != 0) {
    return false;
  }
  if (std::chrono::steady_clock::now() >= *deadline_) {
    request_stop();
    return true;
  }
  return false;
}

SubProblem prepare_subproblem(const ValidityMask& mask, int rows_target,
                              std::int64_t incumbent_objective,
                              const PruningRules& rules) {
  if (rows_target < 1 || rows_target > mask.rows()) {
    throw std::invalid_argument("prepare_subproblem: row target out of range");
  }
  SubProblem sub;
  sub.rows_target = rows_target;
  sub.min_cols = min_columns(incumbent_objective, rows_target);
  for (int j = 0; j < mask.cols(); ++j) {
    if (!rules.column_filter || mask.col_valid(j) >= rows_target) {
      sub.candidate_cols.push_back(j);
    }
  }
  for (int i = 0; i < mask.rows(); ++i) {
    if (!rules.row_filter || mask.row_valid(i) >= sub.min_cols) {
      sub.candidate_rows.push_back(i);
    }
  }
  if (rules.skip_rules) {
    if (sub.min_cols > mask.cols()) {
      sub.status = SubProblem::Status::kSkipped;
      sub.skip_reason = "minC>n";
    } else if (static_cast<int>(sub.candidate_rows.size()) < rows_target) {
      sub.status = SubProblem::Status::kSkipped;
      sub.skip_reason = "rows";
    } else if (static_cast<std::int64_t>(sub.candidate_cols.size()) <
               sub.min_cols) {
      sub.status = SubProblem::Status::kSkipped;
      sub.skip_reason = "cols";
    }
  }
  return sub;
}

namespace {

std::vector<Word> column_bits(const ValidityMask& mask,
                              const std::vector<int>& cols) {
  std::vector<Word> bits(mask.words_per_row(), 0);
  for (const int j : cols) bits[j / kWordBits] |= Word{1} << (j % kWordBits);
  return bits;
}

}  // namespace

SubProblem row_pair_prune(SubProblem sub, const ValidityMask& mask,
                          const PruningRules& rules) {
  if (!sub.ready()) return sub;
  const int need = sub.rows_target - 1;
  const int k = static_cast<int>(sub.candidate_rows.size());
  if (need <= 0 || k == 0) return sub;

  const std::vector<Word> filter = column_bits(mask, sub.candidate_cols);
  const std::size_t words = filter.size();
  // partners[a] lists b with at least minC shared valid candidate columns.
  std::vector<std::vector<int>> partners(k);
  for (int a = 0; a < k; ++a) {
    const auto ra = mask.row_bits(sub.candidate_rows[a]);
    for (int b = a + 1; b < k; ++b) {
      const auto rb = mask.row_bits(sub.candidate_rows[b]);
      std::int64_t shared = 0;
      for (std::size_t w = 0; w < words; ++w) {
        shared += std::popcount(ra[w] & rb[w] & filter[w]);
      }
      if (shared >= sub.min_cols) {
        partners[a].push_back(b);
        partners[b].push_back(a);
      }
    }
  }

  std::vector<int> degree(k);
  std::vector<bool> alive(k, true);
  std::deque<int> queue;
  for (int a = 0; a < k; ++a) {
    degree[a] = static_cast<int>(partners[a].size());
    if (degree[a] < need) {
      alive[a] = false;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (const int b : partners[a]) {
      if (alive[b] && --degree[b] < need) {
        alive[b] = false;
        queue.push_back(b);
      }
    }
  }

  std::vector<int> kept;
  for (int a = 0; a < k; ++a) {
    if (alive[a]) kept.push_back(sub.candidate_rows[a]);
  }
  sub.candidate_rows = std::move(kept);
  if (rules.skip_rules &&
      static_cast<int>(sub.candidate_rows.size()) < sub.rows_target) {
    sub.status = SubProblem::Status::kSkipped;
    sub.skip_reason = "pairs";
  }
  return sub;
}

namespace {

class SubproblemSearch {
 public:
  SubproblemSearch(const SubProblem& sub, const ValidityMask& mask,
                   Incumbent& incumbent, const PruningRules& rules,
                   SearchControl* control)
      : mask_(mask),
        incumbent_(incumbent),
        rules_(rules),
        control_(control),
        target_(sub.rows_target),
        min_cols_(sub.min_cols),
        order_(sub.candidate_rows),
        words_(mask.words_per_row()),
        levels_(static_cast<std::size_t>(sub.rows_target) + 1),
        chosen_(sub.rows_target) {
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return mask.row_valid(a) > mask.row_valid(b);
    });
    for (auto& level : levels_) level.resize(words_);
    levels_[0] = column_bits(mask, sub.candidate_cols);
    if (rules_.exclusion_bound) {
      missing_count_.assign(mask.cols(), 0);
      reciprocal_.resize(mask.rows() + 1);
      for (int c = 1; c <= mask.rows(); ++c) reciprocal_[c] = 1.0 / c;
    }
  }

  void run() { search(0, 0); }

  bool aborted() const { return aborted_; }
  std::optional<Selection> take_best() { return std::move(best_); }

 private:
  bool dominated(std::int64_t cols) const {
    return cols < min_cols_ || target_ * cols <= incumbent_.objective();
  }

  void search(int start, int depth) {
    if (control_ != nullptr && control_->should_stop()) {
      aborted_ = true;
      return;
    }
    const std::vector<Word>& common = levels_[depth];
    const std::int64_t cols = popcount(common);
    if (dominated(cols)) return;
    if (depth == target_) {
      record_leaf(common);
      return;
    }
    const int need = target_ - depth;
    const int available = static_cast<int>(order_.size()) - start;
    if (available < need) return;
    if (rules_.exclusion_bound &&
        dominated(exclusion_bound(start, need, common, cols))) {
      return;
    }
    std::vector<Word>& next = levels_[depth + 1];
    const int last = static_cast<int>(order_.size()) - need;
    for (int k = start; k <= last; ++k) {
      const auto row = mask_.row_bits(order_[k]);
      for (std::size_t w = 0; w < words_; ++w) next[w] = common[w] & row[w];
      chosen_[depth] = order_[k];
      search(k + 1, depth + 1);
      if (aborted_ || dominated(cols)) return;
    }
  }

  std::int64_t exclusion_bound(int start, int need,
                               const std::vector<Word>& common,
                               std::int64_t cols) {
    const int available = static_cast<int>(order_.size()) - start;
    const int droppable = available - need;
    touched_.clear();
    for (int k = start; k < static_cast<int>(order_.size()); ++k) {
      const auto row = mask_.row_bits(order_[k]);
      for (std::size_t w = 0; w < words_; ++w) {
        Word miss = common[w] & ~row[w];
        while (miss != 0) {
          const int j = static_cast<int>(w) * kWordBits + std::countr_zero(miss);
          miss &= miss - 1;
          if (missing_count_[j]++ == 0) touched_.push_back(j);
        }
      }
    }
    std::int64_t bound = cols - static_cast<std::int64_t>(touched_.size());
    if (droppable > 0 && !touched_.empty()) {
      charge_.clear();
      for (int k = start; k < static_cast<int>(order_.size()); ++k) {
        const auto row = mask_.row_bits(order_[k]);
        double charge = 0.0;
        for (std::size_t w = 0; w < words_; ++w) {
          Word miss = common[w] & ~row[w];
          while (miss != 0) {
            const int j =
                static_cast<int>(w) * kWordBits + std::countr_zero(miss);
            miss &= miss - 1;
            if (missing_count_[j] <= droppable) {
              charge += reciprocal_[missing_count_[j]];
            }
          }
        }
        charge_.push_back(charge);
      }
      std::nth_element(charge_.begin(), charge_.begin() + (droppable - 1),
                       charge_.end(), std::greater<>());
      double total = 0.0;
      for (int t = 0; t < droppable; ++t) total += charge_[t];
      // Slack absorbs rounding in the sum; the true count is an integer.
      bound += static_cast<std::int64_t>(std::floor(total + 1e-7));
    }
    for (const int j : touched_) missing_count_[j] = 0;
    return std::min(bound, cols);
  }

  void record_leaf(const std::vector<Word>& common) {
    std::vector<int> rows(chosen_.begin(), chosen_.end());
    std::vector<int> cols;
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = common[w];
      while (bits != 0) {
        cols.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    Selection sel =
        make_selection(mask_, std::move(rows), std::move(cols), "maxcol");
    if (incumbent_.try_improve(sel)) best_ = std::move(sel);
  }

  const ValidityMask& mask_;
  Incumbent& incumbent_;
  const PruningRules& rules_;
  SearchControl* control_;
  const std::int64_t target_;
  const std::int64_t min_cols_;
  std::vector<int> order_;
  const std::size_t words_;
  std::vector<std::vector<Word>> levels_;
  std::vector<int> chosen_;
  std::vector<int> missing_count_;
  std::vector<int> touched_;
  std::vector<double> charge_;
  std::vector<double> reciprocal_;
  std::optional<Selection> best_;
  bool aborted_ = false;
};

}  // namespace

std::optional<Selection> solve_subproblem(const SubProblem& sub,
                                          const ValidityMask& mask,
                                          Incumbent& incumbent,
                                          const PruningRules& rules,
                                          SearchControl* control,
                                          bool* complete) {
  if (complete != nullptr) *complete = true;
  if (sub.rows_target < 1 || sub.rows_target > mask.rows()) {
    throw std::invalid_argument("solve_subproblem: row target out of range");
  }
  SubproblemSearch search(sub, mask, incumbent, rules, control);
  search.run();
  if (complete != nullptr) *complete = !search.aborted();
  return search.take_best();
}

namespace {

// Partitions ordered by R * |{j : beta_j >= R}| descending, larger R first
// on ties.
std::vector<int> partition_order(const ValidityMask& mask) {
  const int m = mask.rows();
  std::vector<std::int64_t> cols_with_at_least(m + 2, 0);
  for (int j = 0; j < mask.cols(); ++j) ++cols_with_at_least[mask.col_valid(j)];
  for (int r = m - 1; r >= 0; --r) cols_with_at_least[r] += cols_with_at_least[r + 1];
  std::vector<int> order(m);
  for (int r = 1; r <= m; ++r) order[r - 1] = r;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const std::int64_t ua = a * cols_with_at_least[a];
    const std::int64_t ub = b * cols_with_at_least[b];
    if (ua != ub) return ua > ub;
    return a > b;
  });
  return order;
}

}  // namespace

MaxColResult solve_maxcol(const ValidityMask& mask,
                          const MaxColOptions& options) {
  if (options.workers < 1) {
    throw std::invalid_argument("solve_maxcol: workers must be >= 1");
  }
  Selection initial;
  if (options.warm_start) {
    initial = make_selection(mask, options.warm_start->kept_rows,
                             options.warm_start->kept_cols, "maxcol");
    if (!feasibility_check(mask, initial, Ratio::zero()).empty()) {
      throw std::invalid_argument(
          "solve_maxcol: warm start contains missing cells");
    }
  } else {
    initial = combined_greedy(mask, options.similarity_window);
  }
  initial.algorithm = "maxcol";
  Incumbent incumbent(std::move(initial));

  std::vector<int> order;
  if (options.deterministic) {
    for (int r = 1; r <= mask.rows(); ++r) order.push_back(r);
  } else {
    order = partition_order(mask);
  }

  SearchControl control =
      options.time_budget
          ? SearchControl(std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              *options.time_budget))
          : SearchControl();

  std::atomic<std::size_t> next{0};
  std::atomic<int> searched{0};
  std::atomic<int> skipped{0};
  std::atomic<bool> incomplete{false};

  auto worker = [&] {
    while (true) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= order.size()) return;
      if (control.should_stop()) {
        incomplete = true;
        return;
      }
      SubProblem sub = prepare_subproblem(mask, order[slot],
                                          incumbent.objective(), options.rules);
      if (sub.ready() && options.rules.pair_pruning) {
        sub = row_pair_prune(std::move(sub), mask, options.rules);
      }
      if (!sub.ready()) {
        ++skipped;
        continue;
      }
      bool complete = true;
      solve_subproblem(sub, mask, incumbent, options.rules, &control, &complete);
      ++searched;
      if (!complete) {
        incomplete = true;
        return;
      }
    }
  };

  const int workers = options.deterministic
                          ? 1
                          : std::max(1, std::min<int>(options.workers,
                                                      static_cast<int>(order.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  MaxColResult result;
  result.selection = incumbent.best();
  result.selection.algorithm = "maxcol";
  result.proven_optimal = !incomplete.load();
  result.incumbent_history = incumbent.history();
  result.subproblems_searched = searched.load();
  result.subproblems_skipped = skipped.load();
  return result;
}

}  // namespace nomiss
