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

#include "nomiss/algorithms.h"

#include "nomiss/baselines.h"
#include "nomiss/errors.h"
#include "nomiss/greedy.h"
#include "nomiss/maxcol.h"
#include "nomiss/rowcol.h"

namespace nomiss {

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> kAll = {
      Algorithm::kMrCleanGreedy, Algorithm::kNoMissGreedy,
      Algorithm::kCombined,      Algorithm::kRowColLp,
      Algorithm::kMaxCol,        Algorithm::kListwise,
      Algorithm::kFeaturewise,   Algorithm::kNaive,
      Algorithm::kAutoMiss,
  };
  return kAll;
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMrCleanGreedy:
      return "mrclean-greedy";
    case Algorithm::kNoMissGreedy:
      return "nomiss-greedy";
    case Algorithm::kCombined:
      return "combined";
    case Algorithm::kRowColLp:
      return "rowcol-lp";
    case Algorithm::kMaxCol:
      return "maxcol";
    case Algorithm::kListwise:
      return "listwise";
    case Algorithm::kFeaturewise:
      return "featurewise";
    case Algorithm::kNaive:
      return "naive";
    case Algorithm::kAutoMiss:
      return "automiss";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const Algorithm a : all_algorithms()) {
    if (algorithm_name(a) == name) return a;
  }
  std::string known;
  for (const Algorithm a : all_algorithms()) {
    if (!known.empty()) known += ", ";
    known += algorithm_name(a);
  }
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected one of " + known + ")");
}

bool requires_zero_gamma(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kNoMissGreedy:
    case Algorithm::kCombined:
    case Algorithm::kRowColLp:
    case Algorithm::kMaxCol:
      return true;
    default:
      return false;
  }
}

bool guarantees_feasibility(Algorithm algorithm) {
  return algorithm != Algorithm::kNaive && algorithm != Algorithm::kAutoMiss;
}

AlgorithmRun run_algorithm(Algorithm algorithm, const ValidityMask& mask,
                           const Ratio& gamma, const RunOptions& options) {
  if (gamma.num() >= gamma.den()) {
    throw UsageError("gamma must lie in [0, 1)");
  }
  if (requires_zero_gamma(algorithm) && !gamma.is_zero()) {
    throw UsageError(algorithm_name(algorithm) +
                     " only supports gamma = 0, got " + gamma.to_string());
  }
  const auto start = std::chrono::steady_clock::now();
  AlgorithmRun run;
  switch (algorithm) {
    case Algorithm::kMrCleanGreedy:
      run.selection = mrclean_greedy(mask, gamma);
      break;
    case Algorithm::kNoMissGreedy:
      run.selection = nomiss_greedy(mask);
      break;
    case Algorithm::kCombined:
      run.selection = combined_greedy(mask);
      break;
    case Algorithm::kRowColLp:
      run.selection = solve_rowcol_nomiss(mask).selection;
      break;
    case Algorithm::kMaxCol: {
      MaxColOptions maxcol;
      maxcol.workers = options.workers;
      maxcol.deterministic = options.deterministic;
      maxcol.time_budget = options.time_budget;
      if (!options.warm_start) {
        maxcol.warm_start = Selection{};
      } else if (*options.warm_start != Algorithm::kCombined) {
        if (*options.warm_start == Algorithm::kMaxCol ||
            !guarantees_feasibility(*options.warm_start)) {
          throw UsageError("warm start must be a gamma = 0 feasible algorithm");
        }
        maxcol.warm_start =
            run_algorithm(*options.warm_start, mask, Ratio::zero()).selection;
      }
      MaxColResult result = solve_maxcol(mask, maxcol);
      run.selection = std::move(result.selection);
      run.proven_optimal = result.proven_optimal;
      run.budget_expired = !result.proven_optimal;
      break;
    }
    case Algorithm::kListwise:
      run.selection = listwise(mask);
      break;
    case Algorithm::kFeaturewise:
      run.selection = featurewise(mask);
      break;
    case Algorithm::kNaive:
      run.selection = naive(mask, gamma);
      break;
    case Algorithm::kAutoMiss:
      run.selection = automiss(mask, gamma);
      break;
  }
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return run;
}

}  // namespace nomiss
