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

#ifndef NOMISS_REPORT_H_
#define NOMISS_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "nomiss/algorithms.h"
#include "nomiss/rational.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

inline constexpr const char* kReportSchema = "nomiss.run_report/1";

// One algorithm run on one data set at one gamma. Counts refer to the input
// in its original orientation.
struct RunReport {
  std::string dataset;
  int rows = 0;
  int cols = 0;
  double percent_missing = 0.0;  // of the input, in [0, 100]
  std::string algorithm;
  Ratio gamma;
  // "ok", "timeout" (no solution within the run limit) or "not-applicable"
  // (gamma > 0 for a zero-gamma-only algorithm).
  std::string status = "ok";
  int kept_rows = 0;
  int kept_cols = 0;
  std::int64_t objective = 0;
  double fraction_valid_retained = 0.0;  // objective / input valid cells
  double runtime_seconds = 0.0;
  bool proven_optimal = false;
  bool transposed = false;
  bool feasible = true;
};

// Builds a report for `sel` (original-orientation indices) after recounting
// the objective and checking the gamma cap against `mask`. Throws
// std::logic_error when the selection claims the cap but violates it, or
// when its objective disagrees with the recount.
RunReport verified_report(const std::string& dataset, const ValidityMask& mask,
                          Algorithm algorithm, const Ratio& gamma,
                          const Selection& sel, double runtime_seconds,
                          bool proven_optimal, bool transposed);

// Report row for a run that produced no selection.
RunReport empty_report(const std::string& dataset, const ValidityMask& mask,
                       Algorithm algorithm, const Ratio& gamma,
                       std::string status, double runtime_seconds);

nlohmann::json to_json(const RunReport& report);

std::string csv_header();
std::string to_csv_row(const RunReport& report);

// Per (dataset, gamma): the algorithm with the largest objective and every
// algorithm's relative gap to it, as a plain-text table.
void write_summary(std::ostream& out, const std::vector<RunReport>& reports);

}  // namespace nomiss

#endif  // NOMISS_REPORT_H_
