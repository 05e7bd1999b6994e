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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nomiss/baselines.h"
#include "nomiss/greedy.h"
#include "nomiss/matrix_io.h"
#include "nomiss/maxcol.h"
#include "nomiss/rowcol.h"
#include "nomiss/selection.h"
#include "nomiss/synth.h"
#include "support/oracles.h"

namespace {

using nomiss::MaxColOptions;
using nomiss::Ratio;
using nomiss::Selection;
using nomiss::ValidityMask;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("%s  criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string format(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a);
  return buf;
}

// Shapes up to max_side x max_side with missing rates cycling through
// 1%, 10%, 40%, 80% and, every fifth mask, a uniform draw from [1%, 80%].
std::vector<ValidityMask> make_suite(std::uint64_t seed, int count, int max_side) {
  static constexpr double kRates[] = {0.01, 0.10, 0.40, 0.80};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.01, 0.80);
  std::vector<ValidityMask> suite;
  suite.reserve(count);
  for (int k = 0; k < count; ++k) {
    const int rows = 1 + static_cast<int>(rng() % max_side);
    const int cols = 1 + static_cast<int>(rng() % max_side);
    const double rate = k % 5 == 4 ? uniform(rng) : kRates[k % 4];
    suite.push_back(nomiss::testing::random_mask(rng, rows, cols, rate));
  }
  return suite;
}

std::int64_t exact(const ValidityMask& m, MaxColOptions options = {}) {
  return nomiss::solve_maxcol(m, options).selection.objective;
}

Outcome oracle_exactness(const std::vector<ValidityMask>& suite,
                         std::vector<std::int64_t>* optima) {
  Outcome o;
  const auto start = Clock::now();
  int mismatches = 0;
  optima->clear();
  for (const auto& m : suite) {
    const nomiss::MaxColResult r = nomiss::solve_maxcol(m);
    const std::int64_t truth = nomiss::testing::brute_force_max_all_valid(m);
    if (r.selection.objective != truth || !r.proven_optimal ||
        !nomiss::feasibility_check(m, r.selection, Ratio::zero()).empty()) {
      ++mismatches;
    }
    optima->push_back(r.selection.objective);
  }
  const double elapsed = seconds_since(start);
  o.pass = mismatches == 0 && elapsed < 60.0;
  o.detail = std::to_string(suite.size()) + " masks, " +
             std::to_string(mismatches) + " mismatches, " +
             format("%.2f s", elapsed);
  return o;
}

Outcome rowcol_exactness() {
  Outcome o;
  const auto suite = make_suite(202, 200, 10);
  const auto start = Clock::now();
  int mismatches = 0;
  for (const auto& m : suite) {
    const auto s = nomiss::solve_rowcol_nomiss(m);
    if (s.weight != nomiss::testing::brute_force_mwis(m)) ++mismatches;
    for (const int i : s.selection.kept_rows) {
      for (const int j : s.selection.kept_cols) {
        if (!m.valid(i, j)) ++mismatches;
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.pass = mismatches == 0 && elapsed < 30.0;
  o.detail = "200 masks, " + std::to_string(mismatches) + " mismatches, " +
             format("%.2f s", elapsed);
  return o;
}

Outcome exported_model_consistency() {
  Outcome o;
  const auto suite = make_suite(303, 120, 6);
  int mismatches = 0;
  for (const auto& m : suite) {
    const auto model = nomiss::testing::parse_lp(
        nomiss::export_rowcol_ip(m, Ratio::zero()));
    const double lp = nomiss::testing::brute_force_lp_optimum(model);
    const auto weight = nomiss::solve_rowcol_nomiss(m).weight;
    if (lp != static_cast<double>(weight)) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = "120 masks up to 6x6, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome greedy_quality(const std::vector<ValidityMask>& suite,
                       const std::vector<std::int64_t>& optima) {
  Outcome o;
  int at_least_99 = 0;
  int equal = 0;
  int from_90 = 0;
  int below_90 = 0;
  int above_one = 0;
  int infeasible = 0;
  double worst = 1.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const Selection g = nomiss::combined_greedy(suite[k]);
    if (!nomiss::feasibility_check(suite[k], g, Ratio::zero()).empty()) ++infeasible;
    const double ratio =
        optima[k] == 0 ? 1.0
                       : static_cast<double>(g.objective) / static_cast<double>(optima[k]);
    if (g.objective > optima[k]) ++above_one;
    if (g.objective == optima[k]) ++equal;
    if (ratio >= 0.99) {
      ++at_least_99;
    } else if (ratio >= 0.9) {
      ++from_90;
    } else {
      ++below_90;
    }
    worst = std::min(worst, ratio);
    sum += ratio;
  }
  const double n = static_cast<double>(suite.size());
  o.pass = at_least_99 >= 0.8 * n && above_one == 0 && infeasible == 0;
  o.detail = format("ratio>=0.99 on %.1f%%", 100.0 * at_least_99 / n) +
             "; distribution: =1 " + std::to_string(equal) + ", [0.99,1) " +
             std::to_string(at_least_99 - equal) + ", [0.9,0.99) " +
             std::to_string(from_90) + ", <0.9 " + std::to_string(below_90) +
             format(", mean %.4f", sum / n) + format(", min %.4f", worst) +
             ", >1 " + std::to_string(above_one) + ", infeasible " +
             std::to_string(infeasible);
  return o;
}

Outcome pruning_soundness() {
  Outcome o;
  const auto suite = make_suite(505, 100, 12);
  const std::vector<std::pair<const char*, std::function<void(nomiss::PruningRules&)>>>
      toggles = {
          {"column filter", [](auto& r) { r.column_filter = false; }},
          {"row filter", [](auto& r) { r.row_filter = false; }},
          {"pair pruning", [](auto& r) { r.pair_pruning = false; }},
          {"skip rules", [](auto& r) { r.skip_rules = false; }},
          {"exclusion bound", [](auto& r) { r.exclusion_bound = false; }},
      };
  int mismatches = 0;
  std::string broken;
  for (const auto& m : suite) {
    const std::int64_t base = exact(m);
    for (const auto& [name, off] : toggles) {
      MaxColOptions options;
      off(options.rules);
      if (exact(m, options) != base) {
        ++mismatches;
        broken += std::string(" ") + name;
      }
    }
  }
  o.pass = mismatches == 0;
  o.detail = "100 masks x 5 rules, " + std::to_string(mismatches) + " changes" + broken;
  return o;
}

Outcome min_columns_table() {
  struct Row {
    std::int64_t obj;
    int rows;
    std::int64_t expected;
  };
  // obj = k * R gives k + 1.
  static constexpr Row kTable[] = {
      {12, 4, 4}, {7, 2, 4},   {0, 5, 1},    {0, 1, 1},     {1, 1, 2},
      {6, 3, 3},  {5, 3, 2},   {9, 3, 4},    {10, 3, 4},    {100, 10, 11},
      {99, 10, 10}, {101, 10, 11}, {4, 7, 1}, {49, 7, 8},   {48, 7, 7},
      {1, 2, 1},  {2, 2, 2},   {1000000, 1000, 1001}, {999999, 1000, 1000},
      {30, 5, 7},
  };
  Outcome o;
  int wrong = 0;
  for (const auto& row : kTable) {
    if (nomiss::min_columns(row.obj, row.rows) != row.expected) ++wrong;
  }
  o.pass = wrong == 0;
  o.detail = std::to_string(std::size(kTable)) + " pairs, " +
             std::to_string(wrong) + " wrong";
  return o;
}

Outcome schedule_independence() {
  Outcome o;
  std::vector<ValidityMask> suite = make_suite(707, 40, 12);
  std::mt19937_64 rng(708);
  for (int k = 0; k < 10; ++k) {
    suite.push_back(nomiss::testing::random_mask(rng, 20 + k, 40 + 4 * k,
                                                 0.03 + 0.02 * k));
  }
  const auto start = Clock::now();
  int mismatches = 0;
  for (const auto& m : suite) {
    std::int64_t first = -1;
    for (int workers : {1, 2, 8}) {
      MaxColOptions options;
      options.workers = workers;
      const std::int64_t got = exact(m, options);
      if (first < 0) first = got;
      if (got != first) ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  o.pass = mismatches == 0 && elapsed < 60.0;
  o.detail = std::to_string(suite.size()) + " masks x {1,2,8} workers, " +
             std::to_string(mismatches) + " mismatches, " +
             format("%.2f s", elapsed);
  return o;
}

Outcome scale_smoke() {
  Outcome o;
  nomiss::MaskSpec spec;
  spec.rows = 100000;
  spec.cols = 120;
  spec.rate = Ratio(1, 200);
  spec.seed = 2026;
  const ValidityMask raw = nomiss::generate_mask(spec);

  const auto start = Clock::now();
  const auto [mask, transposed] = nomiss::orient(raw);
  const Selection greedy = nomiss::combined_greedy(mask);
  const double greedy_seconds = seconds_since(start);

  MaxColOptions options;
  options.warm_start = greedy;
  options.time_budget = std::chrono::duration<double>(300.0);
  options.workers = std::max(1U, std::thread::hardware_concurrency());
  const auto solve_start = Clock::now();
  const nomiss::MaxColResult r = nomiss::solve_maxcol(mask, options);
  const double solve_seconds = seconds_since(solve_start);

  const bool feasible =
      nomiss::feasibility_check(mask, r.selection, Ratio::zero()).empty();
  o.pass = greedy_seconds < 120.0 && r.selection.objective >= greedy.objective &&
           feasible && solve_seconds < 300.0 + 30.0;
  o.detail = std::string("oriented ") + (transposed ? "120x100000" : "as given") +
             ", greedy " + std::to_string(greedy.objective) +
             format(" in %.2f s", greedy_seconds) + ", maxcol " +
             std::to_string(r.selection.objective) +
             format(" in %.2f s", solve_seconds) +
             (r.proven_optimal ? ", proven optimal" : ", budget reached");
  return o;
}

Outcome baseline_sanity(const std::vector<ValidityMask>& suite,
                        const std::vector<std::int64_t>& optima) {
  Outcome o;
  int violations = 0;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto& m = suite[k];
    if (nomiss::listwise(m).objective > optima[k]) ++violations;
    if (nomiss::featurewise(m).objective > optima[k]) ++violations;
    if (nomiss::automiss(m, Ratio::zero()).objective > optima[k]) ++violations;
  }
  o.pass = violations == 0;
  o.detail = std::to_string(suite.size()) + " masks, " +
             std::to_string(violations) + " dominance violations";
  return o;
}

}  // namespace

int main() {
  const std::vector<ValidityMask> suite = make_suite(101, 500, 12);
  std::vector<std::int64_t> optima;

  report(1, "maxcol equals brute force on 500 masks up to 12x12",
         oracle_exactness(suite, &optima));
  report(2, "rowcol min-cut weight equals brute-force independent set",
         rowcol_exactness());
  report(3, "exported rowcol model optimum equals the independent-set weight",
         exported_model_consistency());
  report(4, "combined greedy within 1% of maxcol on at least 80% of masks",
         greedy_quality(suite, optima));
  report(5, "switching off any pruning rule leaves maxcol unchanged",
         pruning_soundness());
  report(6, "min_columns table", min_columns_table());
  report(7, "maxcol objective independent of worker count",
         schedule_independence());
  report(8, "100000x120 MCAR 0.5% scale run", scale_smoke());
  report(9, "listwise, featurewise and automiss never beat maxcol",
         baseline_sanity(suite, optima));

  std::printf("summary: %d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
