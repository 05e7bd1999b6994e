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

// Exhaustive reference solvers for small masks. They read cells through
// ValidityMask::valid() only and share no code with the solvers under test.

#ifndef NOMISS_TESTS_SUPPORT_ORACLES_H_
#define NOMISS_TESTS_SUPPORT_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomiss/validity_mask.h"

namespace nomiss::testing {

// Per column, the set of rows where it is valid, as a bit set. m <= 30.
inline std::vector<std::uint32_t> valid_rows_by_col(const ValidityMask& mask) {
  if (mask.rows() > 30) throw std::invalid_argument("oracle: too many rows");
  std::vector<std::uint32_t> out(mask.cols(), 0);
  for (int j = 0; j < mask.cols(); ++j) {
    for (int i = 0; i < mask.rows(); ++i) {
      if (mask.valid(i, j)) out[j] |= 1U << i;
    }
  }
  return out;
}

// Largest all-valid submatrix: every row subset S keeps exactly the columns
// valid on all of S.
inline std::int64_t brute_force_max_all_valid(const ValidityMask& mask) {
  const auto cols = valid_rows_by_col(mask);
  std::int64_t best = 0;
  for (std::uint32_t s = 1; s < (1U << mask.rows()); ++s) {
    std::int64_t kept = 0;
    for (const auto c : cols) kept += (c & s) == s ? 1 : 0;
    best = std::max<std::int64_t>(best, std::popcount(s) * kept);
  }
  return best;
}

// The per-missing-cell MaxCol IP with sum r = R, solved by enumeration:
// max sum c_j subject to r_i + c_j <= 1 for every missing (i, j).
inline std::int64_t brute_force_maxcol_ip(const ValidityMask& mask, int R) {
  std::int64_t best = -1;
  for (std::uint32_t s = 0; s < (1U << mask.rows()); ++s) {
    if (std::popcount(s) != R) continue;
    std::int64_t cols = 0;
    for (int j = 0; j < mask.cols(); ++j) {
      bool ok = true;
      for (int i = 0; i < mask.rows(); ++i) {
        if (((s >> i) & 1U) && !mask.valid(i, j)) ok = false;
      }
      cols += ok ? 1 : 0;
    }
    best = std::max(best, cols);
  }
  return best;
}

// Best R * sum c over all binary (r, c) with sum r = R >= 1 that satisfy, for
// each row with lambda_i > 0 missing cells,
//   r_i + (1 / lambda_i) * sum_j c_j (1 - b_ij) <= 1.
// Enumerates every pair of row and column subsets; m + n <= 20.
inline std::int64_t brute_force_folded_maxcol(const ValidityMask& mask) {
  const int m = mask.rows();
  const int n = mask.cols();
  if (m + n > 20) throw std::invalid_argument("oracle: mask too large");
  std::int64_t best = 0;
  for (std::uint32_t rs = 1; rs < (1U << m); ++rs) {
    for (std::uint32_t cs = 0; cs < (1U << n); ++cs) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        int lambda = 0;
        int hit = 0;
        for (int j = 0; j < n; ++j) {
          if (mask.valid(i, j)) continue;
          ++lambda;
          hit += (cs >> j) & 1U;
        }
        if (lambda == 0) continue;
        // r_i + hit / lambda <= 1, scaled by lambda.
        const int r = (rs >> i) & 1U;
        if (r * lambda + hit > lambda) ok = false;
      }
      if (ok) {
        best = std::max<std::int64_t>(
            best, static_cast<std::int64_t>(std::popcount(rs)) * std::popcount(cs));
      }
    }
  }
  return best;
}

// Maximum-weight independent set of the row/column conflict graph with
// weights alpha (row valid counts) and beta (column valid counts).
inline std::int64_t brute_force_mwis(const ValidityMask& mask) {
  std::vector<std::int64_t> alpha(mask.rows(), 0);
  std::vector<std::int64_t> beta(mask.cols(), 0);
  for (int i = 0; i < mask.rows(); ++i) {
    for (int j = 0; j < mask.cols(); ++j) {
      if (mask.valid(i, j)) {
        ++alpha[i];
        ++beta[j];
      }
    }
  }
  const auto cols = valid_rows_by_col(mask);
  std::int64_t best = 0;
  for (std::uint32_t s = 0; s < (1U << mask.rows()); ++s) {
    std::int64_t w = 0;
    for (int i = 0; i < mask.rows(); ++i) {
      if ((s >> i) & 1U) w += alpha[i];
    }
    for (int j = 0; j < mask.cols(); ++j) {
      if ((cols[j] & s) == s) w += beta[j];
    }
    best = std::max(best, w);
  }
  return best;
}

// Minimum weight vertex cover of the conflict graph (complement of MWIS).
inline std::int64_t brute_force_min_cover(const ValidityMask& mask) {
  std::int64_t total = 0;
  for (int i = 0; i < mask.rows(); ++i) {
    for (int j = 0; j < mask.cols(); ++j) total += mask.valid(i, j) ? 2 : 0;
  }
  return total - brute_force_mwis(mask);
}

// Best number of valid cells over every row subset x column subset whose
// rows and columns all have missing fraction <= num/den. Tiny masks only.
inline std::int64_t brute_force_best_selection(const ValidityMask& mask,
                                               std::int64_t num,
                                               std::int64_t den) {
  const int m = mask.rows();
  const int n = mask.cols();
  if (m + n > 20) throw std::invalid_argument("oracle: mask too large");
  std::int64_t best = 0;
  for (std::uint32_t rs = 0; rs < (1U << m); ++rs) {
    for (std::uint32_t cs = 0; cs < (1U << n); ++cs) {
      const int nr = std::popcount(rs);
      const int nc = std::popcount(cs);
      if (nr == 0 || nc == 0) continue;
      bool ok = true;
      std::int64_t valid = 0;
      for (int i = 0; i < m && ok; ++i) {
        if (!((rs >> i) & 1U)) continue;
        int miss = 0;
        for (int j = 0; j < n; ++j) {
          if (!((cs >> j) & 1U)) continue;
          if (mask.valid(i, j)) {
            ++valid;
          } else {
            ++miss;
          }
        }
        if (miss * den > num * nc) ok = false;
      }
      for (int j = 0; j < n && ok; ++j) {
        if (!((cs >> j) & 1U)) continue;
        int miss = 0;
        for (int i = 0; i < m; ++i) {
          if (((rs >> i) & 1U) && !mask.valid(i, j)) ++miss;
        }
        if (miss * den > num * nr) ok = false;
      }
      if (ok) best = std::max(best, valid);
    }
  }
  return best;
}

inline ValidityMask random_mask(std::mt19937_64& rng, int rows, int cols,
                                double missing_rate) {
  std::bernoulli_distribution missing(missing_rate);
  MaskBuilder builder(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) builder.set_valid(i, j, !missing(rng));
  }
  return std::move(builder).build();
}

// Minimal reader for the LP text this project writes: one objective, "<="
// constraints, a Binary section. Coefficients are parsed as doubles.
struct LpModel {
  struct Row {
    std::string name;
    std::map<std::string, double> terms;
    double rhs = 0.0;
  };
  bool maximize = false;
  std::map<std::string, double> objective;
  std::vector<Row> constraints;
  std::vector<std::string> binaries;
};

inline void parse_lp_terms(std::istringstream& in,
                           std::map<std::string, double>& terms,
                           std::string* stop_token, double* rhs) {
  std::string tok;
  double sign = 1.0;
  double coef = 1.0;
  bool have_coef = false;
  while (in >> tok) {
    if (tok == "+") {
      sign = 1.0;
    } else if (tok == "-") {
      sign = -1.0;
    } else if (tok == "<=" || tok == ">=" || tok == "=") {
      *stop_token = tok;
      in >> *rhs;
      return;
    } else if (std::isdigit(static_cast<unsigned char>(tok[0])) ||
               tok[0] == '.' || tok[0] == '-') {
      coef = std::stod(tok);
      have_coef = true;
    } else {
      terms[tok] += sign * (have_coef ? coef : 1.0);
      sign = 1.0;
      coef = 1.0;
      have_coef = false;
    }
  }
}

inline LpModel parse_lp(const std::string& text) {
  LpModel model;
  std::istringstream lines(text);
  std::string line;
  enum { kNone, kObjective, kConstraints, kBinary } section = kNone;
  std::string pending;  // a statement spanning continuation lines
  auto flush = [&] {
    if (pending.empty()) return;
    std::istringstream in(pending);
    std::string name;
    in >> name;  // "label:"
    if (section == kObjective) {
      std::string stop;
      double rhs = 0;
      parse_lp_terms(in, model.objective, &stop, &rhs);
    } else if (section == kConstraints) {
      LpModel::Row row;
      row.name = name.substr(0, name.size() - 1);
      std::string stop;
      parse_lp_terms(in, row.terms, &stop, &row.rhs);
      if (stop != "<=") throw std::runtime_error("unsupported sense " + stop);
      model.constraints.push_back(std::move(row));
    }
    pending.clear();
  };
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line == "Maximize" || line == "Minimize") {
      model.maximize = line == "Maximize";
      section = kObjective;
      continue;
    }
    if (line == "Subject To") {
      flush();
      section = kConstraints;
      continue;
    }
    if (line == "Binary") {
      flush();
      section = kBinary;
      continue;
    }
    if (line == "End") {
      flush();
      break;
    }
    if (section == kBinary) {
      std::istringstream in(line);
      std::string v;
      while (in >> v) model.binaries.push_back(v);
      continue;
    }
    // Statements start with " label:"; continuation lines do not.
    const auto colon = line.find(':');
    const bool starts_statement =
        colon != std::string::npos && line.find_first_not_of(' ') < colon &&
        line.substr(0, colon).find(' ', line.find_first_not_of(' ')) ==
            std::string::npos;
    if (starts_statement) flush();
    pending += " " + line;
  }
  return model;
}

// Optimum of a pure-binary LP model by enumeration (<= 22 variables).
inline double brute_force_lp_optimum(const LpModel& model) {
  const auto& vars = model.binaries;
  if (vars.size() > 22) throw std::invalid_argument("oracle: too many vars");
  std::map<std::string, int> slot;
  for (std::size_t k = 0; k < vars.size(); ++k) slot[vars[k]] = static_cast<int>(k);
  double best = model.maximize ? -1e300 : 1e300;
  std::vector<int> x(vars.size());
  for (std::uint32_t s = 0; s < (1U << vars.size()); ++s) {
    for (std::size_t k = 0; k < vars.size(); ++k) x[k] = (s >> k) & 1U;
    bool ok = true;
    for (const auto& row : model.constraints) {
      double lhs = 0;
      for (const auto& [v, c] : row.terms) lhs += c * x[slot.at(v)];
      if (lhs > row.rhs + 1e-9) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    double obj = 0;
    for (const auto& [v, c] : model.objective) obj += c * x[slot.at(v)];
    best = model.maximize ? std::max(best, obj) : std::min(best, obj);
  }
  return best;
}

}  // namespace nomiss::testing

#endif  // NOMISS_TESTS_SUPPORT_ORACLES_H_
