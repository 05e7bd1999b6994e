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

#ifndef NOMISS_ALGORITHMS_H_
#define NOMISS_ALGORITHMS_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nomiss/rational.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

enum class Algorithm {
  kMrCleanGreedy,
  kNoMissGreedy,
  kCombined,
  kRowColLp,
  kMaxCol,
  kListwise,
  kFeaturewise,
  kNaive,
  kAutoMiss,
};

const std::vector<Algorithm>& all_algorithms();
std::string algorithm_name(Algorithm algorithm);
// Throws UsageError for unknown names.
Algorithm parse_algorithm(std::string_view name);

// Algorithms that only solve the no-missing-data case.
bool requires_zero_gamma(Algorithm algorithm);
// Algorithms whose output always satisfies the gamma cap per line.
bool guarantees_feasibility(Algorithm algorithm);

struct RunOptions {
  int workers = 1;
  bool deterministic = false;
  std::optional<std::chrono::duration<double>> time_budget;
  // Warm start for maxcol; nullopt means combined greedy.
  std::optional<Algorithm> warm_start = Algorithm::kCombined;
};

struct AlgorithmRun {
  Selection selection;
  bool proven_optimal = false;
  double seconds = 0.0;
  // Set when a time budget expired before the search finished.
  bool budget_expired = false;
};

// Runs one algorithm on `mask` as given (no orientation). For automiss,
// gamma is the global missing-fraction threshold tau. Throws UsageError when
// a zero-gamma-only algorithm gets gamma > 0.
AlgorithmRun run_algorithm(Algorithm algorithm, const ValidityMask& mask,
                           const Ratio& gamma, const RunOptions& options = {});

}  // namespace nomiss

#endif  // NOMISS_ALGORITHMS_H_
