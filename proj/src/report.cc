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

#include "nomiss/report.h"

#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace nomiss {

namespace {

RunReport base_report(const std::string& dataset, const ValidityMask& mask,
                      Algorithm algorithm, const Ratio& gamma) {
  RunReport r;
  r.dataset = dataset;
  r.rows = mask.rows();
  r.cols = mask.cols();
  r.percent_missing =
      mask.cells() == 0
          ? 0.0
          : 100.0 * static_cast<double>(mask.total_missing()) /
                static_cast<double>(mask.cells());
  r.algorithm = algorithm_name(algorithm);
  r.gamma = gamma;
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

}  // namespace

RunReport verified_report(const std::string& dataset, const ValidityMask& mask,
                          Algorithm algorithm, const Ratio& gamma,
                          const Selection& sel, double runtime_seconds,
                          bool proven_optimal, bool transposed) {
  RunReport r = base_report(dataset, mask, algorithm, gamma);
  const Selection recount =
      make_selection(mask, sel.kept_rows, sel.kept_cols, sel.algorithm);
  if (recount.objective != sel.objective) {
    throw std::logic_error(r.algorithm + " reported objective " +
                           std::to_string(sel.objective) + ", recount gives " +
                           std::to_string(recount.objective));
  }
  // automiss reads gamma as a global threshold, so the per-line cap is
  // checked against the effective gamma of the run.
  const Ratio cap =
      requires_zero_gamma(algorithm) ? Ratio::zero() : gamma;
  r.feasible = feasibility_check(mask, recount, cap).empty();
  if (guarantees_feasibility(algorithm) && !r.feasible) {
    throw std::logic_error(r.algorithm + " returned an infeasible selection");
  }
  r.kept_rows = static_cast<int>(recount.kept_rows.size());
  r.kept_cols = static_cast<int>(recount.kept_cols.size());
  r.objective = recount.objective;
  if (gamma.is_zero() && r.feasible &&
      r.objective != static_cast<std::int64_t>(r.kept_rows) * r.kept_cols) {
    throw std::logic_error("gamma = 0 objective differs from rows x cols");
  }
  r.fraction_valid_retained =
      mask.total_valid() == 0
          ? 1.0
          : static_cast<double>(r.objective) /
                static_cast<double>(mask.total_valid());
  r.runtime_seconds = runtime_seconds;
  r.proven_optimal = proven_optimal;
  r.transposed = transposed;
  return r;
}

RunReport empty_report(const std::string& dataset, const ValidityMask& mask,
                       Algorithm algorithm, const Ratio& gamma,
                       std::string status, double runtime_seconds) {
  RunReport r = base_report(dataset, mask, algorithm, gamma);
  r.status = std::move(status);
  r.runtime_seconds = runtime_seconds;
  r.feasible = false;
  return r;
}

nlohmann::json to_json(const RunReport& r) {
  return nlohmann::json{
      {"schema", kReportSchema},
      {"dataset", r.dataset},
      {"m", r.rows},
      {"n", r.cols},
      {"percent_missing", r.percent_missing},
      {"algorithm", r.algorithm},
      {"gamma", r.gamma.to_string()},
      {"status", r.status},
      {"kept_rows_count", r.kept_rows},
      {"kept_cols_count", r.kept_cols},
      {"objective", r.objective},
      {"percent_valid_retained", r.fraction_valid_retained},
      {"runtime_seconds", r.runtime_seconds},
      {"proven_optimal", r.proven_optimal},
      {"transposed", r.transposed},
      {"feasible", r.feasible},
  };
}

std::string csv_header() {
  return "dataset,m,n,percent_missing,algorithm,gamma,status,kept_rows_count,"
         "kept_cols_count,objective,percent_valid_retained,runtime_seconds,"
         "proven_optimal,transposed,feasible";
}

std::string to_csv_row(const RunReport& r) {
  return csv_escape(r.dataset) + "," + std::to_string(r.rows) + "," +
         std::to_string(r.cols) + "," + fmt("%.6g", r.percent_missing) + "," +
         r.algorithm + "," + r.gamma.to_string() + "," + r.status + "," +
         std::to_string(r.kept_rows) + "," + std::to_string(r.kept_cols) +
         "," + std::to_string(r.objective) + "," +
         fmt("%.9g", r.fraction_valid_retained) + "," +
         fmt("%.6f", r.runtime_seconds) + "," +
         (r.proven_optimal ? "true" : "false") + "," +
         (r.transposed ? "true" : "false") + "," +
         (r.feasible ? "true" : "false");
}

void write_summary(std::ostream& out, const std::vector<RunReport>& reports) {
  // Keyed by (dataset, gamma) in first-seen order.
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::vector<const RunReport*>>
      groups;
  for (const auto& r : reports) {
    auto key = std::make_pair(r.dataset, r.gamma.to_string());
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    it->second.push_back(&r);
  }
  for (const auto& key : keys) {
    const auto& group = groups[key];
    const RunReport* best = nullptr;
    for (const RunReport* r : group) {
      if (r->status != "ok" || !r->feasible) continue;
      if (best == nullptr || r->objective > best->objective) best = r;
    }
    out << key.first << "  gamma=" << key.second << "  best="
        << (best ? best->algorithm + " (" + std::to_string(best->objective) + ")"
                 : std::string("none"))
        << "\n";
    for (const RunReport* r : group) {
      out << "  " << r->algorithm;
      for (std::size_t pad = r->algorithm.size(); pad < 16; ++pad) out << ' ';
      if (r->status != "ok") {
        out << r->status << "\n";
        continue;
      }
      out << r->objective;
      if (best != nullptr && best->objective > 0) {
        const double gap = 100.0 *
                            static_cast<double>(best->objective - r->objective) /
                            static_cast<double>(best->objective);
        out << "  gap " << fmt("%.3f", gap) << "%";
      }
      if (!r->feasible) out << "  (violates gamma)";
      out << "  " << fmt("%.3f", r->runtime_seconds) << "s\n";
    }
  }
}

}  // namespace nomiss
