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

#include "nomiss/rowcol.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nomiss/errors.h"
#include "nomiss/max_flow.h"
#include "nomiss/missing_index.h"

namespace nomiss {

ConflictGraph build_conflict_graph(const ValidityMask& mask) {
  ConflictGraph graph;
  graph.row_weight.assign(mask.row_valid_counts().begin(),
                          mask.row_valid_counts().end());
  graph.col_weight.assign(mask.col_valid_counts().begin(),
                          mask.col_valid_counts().end());
  const MissingIndex index(mask);
  graph.edges.reserve(static_cast<std::size_t>(mask.total_missing()));
  for (int i = 0; i < mask.rows(); ++i) {
    for (const int j : index.by_row[i]) graph.edges.emplace_back(i, j);
  }
  return graph;
}

RowColSolution solve_rowcol_nomiss(const ValidityMask& mask) {
  const ConflictGraph graph = build_conflict_graph(mask);
  const int m = graph.rows();
  const int n = graph.cols();
  const int source = m + n;
  const int sink = m + n + 1;

  MaxFlow::Capacity total_weight = 0;
  for (const auto w : graph.row_weight) total_weight += w;
  for (const auto w : graph.col_weight) total_weight += w;
  const MaxFlow::Capacity unbounded = total_weight + 1;

  MaxFlow flow(m + n + 2);
  for (int i = 0; i < m; ++i) flow.add_arc(source, i, graph.row_weight[i]);
  for (int j = 0; j < n; ++j) flow.add_arc(m + j, sink, graph.col_weight[j]);
  for (const auto& [i, j] : graph.edges) flow.add_arc(i, m + j, unbounded);

  const MaxFlow::Capacity cut = flow.solve(source, sink);
  const std::vector<bool> side = flow.source_side(source);

  std::vector<int> rows;
  std::vector<int> cols;
  std::int64_t weight = 0;
  for (int i = 0; i < m; ++i) {
    if (side[i]) {
      rows.push_back(i);
      weight += graph.row_weight[i];
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!side[m + j]) {
      cols.push_back(j);
      weight += graph.col_weight[j];
    }
  }
  RowColSolution out;
  out.selection =
      make_selection(mask, std::move(rows), std::move(cols), "rowcol-lp");
  out.weight = weight;
  out.cut = cut;
  return out;
}

namespace {

// Writes "a x + b y - c z" with bare names for unit coefficients. Long
// expressions wrap onto indented continuation lines.
class LinearExpr {
 public:
  explicit LinearExpr(std::ostringstream& out) : out_(out) {}

  void term(const std::string& coef, const std::string& var) {
    const bool negative = !coef.empty() && coef.front() == '-';
    const std::string magnitude = negative ? coef.substr(1) : coef;
    if (terms_ > 0 && terms_ % kTermsPerLine == 0) out_ << "\n   ";
    if (terms_ == 0) {
      if (negative) out_ << "- ";
    } else {
      out_ << (negative ? " - " : " + ");
    }
    if (magnitude != "1") out_ << magnitude << ' ';
    out_ << var;
    ++terms_;
  }

  int terms() const { return terms_; }

 private:
  static constexpr int kTermsPerLine = 10;
  std::ostringstream& out_;
  int terms_ = 0;
};

std::string row_var(int i) { return "r" + std::to_string(i); }
std::string col_var(int j) { return "c" + std::to_string(j); }
std::string cell_var(int i, int j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

// (1 - b - gamma) / size as a decimal; empty when the coefficient is zero.
std::string cross_coefficient(bool valid, const Ratio& gamma,
                              std::int64_t size) {
  const std::int64_t numer = (valid ? 0 : gamma.den()) - gamma.num();
  if (numer == 0) return {};
  std::int64_t denom = 0;
  if (__builtin_mul_overflow(gamma.den(), size, &denom)) {
    throw std::overflow_error("gamma denominator too large for model export");
  }
  return format_decimal(numer, denom);
}

void write_header(std::ostringstream& out, const char* model,
                  const ValidityMask& mask, const Ratio& gamma) {
  out << "\\ " << model << ": " << mask.rows() << " rows x " << mask.cols()
      << " columns, gamma = " << gamma.to_string() << "\n";
}

void write_line_constraints(std::ostringstream& out, const ValidityMask& mask,
                            const Ratio& gamma) {
  const int m = mask.rows();
  const int n = mask.cols();
  for (int i = 0; i < m; ++i) {
    out << " row" << i << ": ";
    LinearExpr expr(out);
    expr.term("1", row_var(i));
    for (int j = 0; j < n; ++j) {
      const std::string coef = cross_coefficient(mask.valid(i, j), gamma, n);
      if (!coef.empty()) expr.term(coef, col_var(j));
    }
    out << " <= 1\n";
  }
  for (int j = 0; j < n; ++j) {
    out << " col" << j << ": ";
    LinearExpr expr(out);
    expr.term("1", col_var(j));
    for (int i = 0; i < m; ++i) {
      const std::string coef = cross_coefficient(mask.valid(i, j), gamma, m);
      if (!coef.empty()) expr.term(coef, row_var(i));
    }
    out << " <= 1\n";
  }
}

void write_binaries(std::ostringstream& out, const std::vector<std::string>& vars) {
  out << "Binary\n";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    out << ' ' << vars[k];
    if (k % 10 == 9 || k + 1 == vars.size()) out << "\n";
  }
  out << "End\n";
}

std::vector<std::string> line_vars(const ValidityMask& mask) {
  std::vector<std::string> vars;
  for (int i = 0; i < mask.rows(); ++i) vars.push_back(row_var(i));
  for (int j = 0; j < mask.cols(); ++j) vars.push_back(col_var(j));
  return vars;
}

void check_gamma(const Ratio& gamma) {
  if (gamma.num() >= gamma.den()) {
    throw UsageError("gamma must lie in [0, 1)");
  }
}

}  // namespace

std::string export_rowcol_ip(const ValidityMask& mask, const Ratio& gamma) {
  check_gamma(gamma);
  std::ostringstream out;
  write_header(out, "RowCol IP", mask, gamma);
  out << "Maximize\n obj: ";
  {
    LinearExpr expr(out);
    for (int i = 0; i < mask.rows(); ++i) {
      expr.term(std::to_string(mask.row_valid(i)), row_var(i));
    }
    for (int j = 0; j < mask.cols(); ++j) {
      expr.term(std::to_string(mask.col_valid(j)), col_var(j));
    }
  }
  out << "\nSubject To\n";
  write_line_constraints(out, mask, gamma);
  write_binaries(out, line_vars(mask));
  return out.str();
}

std::string export_element_ip(const ValidityMask& mask, const Ratio& gamma) {
  check_gamma(gamma);
  const int m = mask.rows();
  const int n = mask.cols();
  std::ostringstream out;
  write_header(out, "Element IP", mask, gamma);
  out << "Maximize\n obj: ";
  {
    LinearExpr expr(out);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (mask.valid(i, j)) expr.term("1", cell_var(i, j));
      }
    }
    if (expr.terms() == 0 && m > 0 && n > 0) expr.term("0", cell_var(0, 0));
  }
  out << "\nSubject To\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      out << " link_" << i << "_" << j << ": ";
      LinearExpr expr(out);
      expr.term("1", cell_var(i, j));
      expr.term("-0.5", row_var(i));
      expr.term("-0.5", col_var(j));
      out << " <= 0\n";
    }
  }
  write_line_constraints(out, mask, gamma);
  std::vector<std::string> vars;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) vars.push_back(cell_var(i, j));
  }
  for (auto& v : line_vars(mask)) vars.push_back(std::move(v));
  write_binaries(out, vars);
  return out.str();
}

void write_model(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace nomiss
