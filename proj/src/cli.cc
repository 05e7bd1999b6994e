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

#include "nomiss/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "nomiss/algorithms.h"
#include "nomiss/errors.h"
#include "nomiss/matrix_io.h"
#include "nomiss/report.h"
#include "nomiss/rowcol.h"
#include "nomiss/synth.h"

namespace nomiss::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kCleanTimeBudget = 18000.0;
constexpr double kBenchTimeout = 300.0;

struct IngestArgs {
  std::string delimiter = ",";
  std::vector<std::string> missing = {"NA", "", "?"};
  bool header = false;
  bool row_ids = false;

  void add_to(CLI::App& app) {
    app.add_option("-d,--delimiter", delimiter,
                   "Field delimiter: a single character, 'tab' or '\\t'")
        ->capture_default_str();
    app.add_option("--missing", missing,
                   "Missing-value token (repeatable; an empty string matches "
                   "blank cells)")
        ->capture_default_str();
    app.add_flag("--header", header, "First line is a header");
    app.add_flag("--row-ids", row_ids, "First field of each line is a row id");
  }

  CleanConfig config(const Ratio& gamma) const {
    CleanConfig c;
    c.gamma = gamma;
    c.missing_tokens = missing;
    c.has_header = header;
    c.has_row_ids = row_ids;
    if (delimiter == "tab" || delimiter == "\\t" || delimiter == "\t") {
      c.delimiter = '\t';
    } else if (delimiter.size() == 1) {
      c.delimiter = delimiter[0];
    } else {
      throw UsageError("delimiter must be a single character, got '" +
                       delimiter + "'");
    }
    c.validate();
    return c;
  }
};

struct SolverArgs {
  int workers = 1;
  bool deterministic = false;
  std::string warm_start = "combined";

  void add_to(CLI::App& app) {
    if (const char* env = std::getenv("NOMISS_WORKERS")) {
      workers = std::max(1, std::atoi(env));
    }
    app.add_option("-w,--workers", workers,
                   "maxcol worker threads (default: $NOMISS_WORKERS or 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--deterministic", deterministic,
                 "maxcol: ascending R on one worker, reproducible selection");
    app.add_option("--warm-start", warm_start,
                   "maxcol initial incumbent: an algorithm name or 'none'")
        ->capture_default_str();
  }

  RunOptions options(double budget_seconds) const {
    RunOptions o;
    o.workers = workers;
    o.deterministic = deterministic;
    o.time_budget = std::chrono::duration<double>(budget_seconds);
    if (warm_start == "none") {
      o.warm_start.reset();
    } else {
      o.warm_start = parse_algorithm(warm_start);
    }
    return o;
  }
};

struct CleanArgs {
  std::string input;
  std::string gamma = "0";
  std::string algorithm;
  std::string output;
  std::string report;
  double time_budget = kCleanTimeBudget;
  IngestArgs ingest;
  SolverArgs solver;
};

int cmd_clean(const CleanArgs& args, std::ostream& out, std::ostream& err) {
  const Ratio gamma = parse_fraction_below_one(args.gamma, "gamma");
  const Algorithm algorithm = parse_algorithm(args.algorithm);
  if (requires_zero_gamma(algorithm) && !gamma.is_zero()) {
    throw UsageError(args.algorithm + " only supports --gamma 0");
  }
  if (args.time_budget <= 0) throw UsageError("--time-budget must be positive");
  const RunOptions options = args.solver.options(args.time_budget);
  const CleanConfig config = args.ingest.config(gamma);

  const DataTable table = read_table(args.input, config);
  const ValidityMask mask = table_to_mask(table, config);
  const auto [oriented, transposed] = orient(mask);
  AlgorithmRun run = run_algorithm(algorithm, oriented, gamma, options);
  const Selection sel = map_to_original(std::move(run.selection), transposed);

  if (run.budget_expired && sel.objective == 0 && mask.total_valid() > 0) {
    err << "time budget expired before any solution was found\n";
    return kTimeoutWithoutSolution;
  }
  const RunReport report =
      verified_report(args.input, mask, algorithm, gamma, sel, run.seconds,
                      run.proven_optimal, transposed);

  if (!args.output.empty()) {
    std::ofstream file(args.output, std::ios::binary);
    if (!file) throw DataError("cannot write " + args.output);
    write_selection(table, config, sel, file);
  }
  const std::string json = to_json(report).dump(2);
  if (args.report.empty()) {
    out << json << "\n";
  } else {
    std::ofstream file(args.report);
    if (!file) throw DataError("cannot write " + args.report);
    file << json << "\n";
    out << report.algorithm << ": kept " << report.kept_rows << " x "
        << report.kept_cols << ", " << report.objective << " valid cells ("
        << report.fraction_valid_retained * 100.0 << "% retained)"
        << (report.proven_optimal ? ", proven optimal" : "") << "\n";
  }
  if (run.budget_expired) {
    err << "warning: time budget expired; solution not proven optimal\n";
  }
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> gammas = {"0", "0.05", "0.1"};
  std::vector<std::string> algorithms;
  double timeout = kBenchTimeout;
  std::string csv;
  std::string jsonl;
  IngestArgs ingest;
  SolverArgs solver;
};

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file()) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw UsageError("no such input: " + in);
    }
  }
  if (files.empty()) throw UsageError("bench: no input files");
  return files;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const auto files = expand_inputs(args.inputs);
  std::vector<Ratio> gammas;
  for (const auto& g : args.gammas) {
    gammas.push_back(parse_fraction_below_one(g, "gamma"));
  }
  if (gammas.empty()) throw UsageError("bench: no gamma values");
  std::vector<Algorithm> algorithms;
  for (const auto& a : args.algorithms) algorithms.push_back(parse_algorithm(a));
  if (algorithms.empty()) algorithms = all_algorithms();
  if (args.timeout <= 0) throw UsageError("--timeout must be positive");
  const RunOptions options = args.solver.options(args.timeout);

  std::ofstream csv;
  std::ofstream jsonl;
  if (!args.csv.empty()) {
    csv.open(args.csv);
    if (!csv) throw DataError("cannot write " + args.csv);
    csv << csv_header() << "\n";
  }
  if (!args.jsonl.empty()) {
    jsonl.open(args.jsonl);
    if (!jsonl) throw DataError("cannot write " + args.jsonl);
  }

  std::vector<RunReport> reports;
  for (const auto& file : files) {
    const CleanConfig config = args.ingest.config(Ratio::zero());
    const ValidityMask mask = load_matrix(file, config);
    const auto [oriented, transposed] = orient(mask);
    for (const Ratio& gamma : gammas) {
      for (const Algorithm algorithm : algorithms) {
        RunReport report;
        if (requires_zero_gamma(algorithm) && !gamma.is_zero()) {
          report = empty_report(file.string(), mask, algorithm, gamma,
                                "not-applicable", 0.0);
        } else {
          AlgorithmRun run = run_algorithm(algorithm, oriented, gamma, options);
          if (algorithm != Algorithm::kMaxCol && run.seconds > args.timeout) {
            report = empty_report(file.string(), mask, algorithm, gamma,
                                  "timeout", run.seconds);
          } else {
            const Selection sel =
                map_to_original(std::move(run.selection), transposed);
            report = verified_report(file.string(), mask, algorithm, gamma,
                                     sel, run.seconds, run.proven_optimal,
                                     transposed);
          }
        }
        if (csv.is_open()) csv << to_csv_row(report) << "\n";
        if (jsonl.is_open()) jsonl << to_json(report).dump() << "\n";
        reports.push_back(std::move(report));
      }
    }
    err << "done: " << file.string() << "\n";
  }
  write_summary(out, reports);
  return kOk;
}

struct GenArgs {
  std::string mechanism = "mcar";
  std::string rate = "0.05";
  std::uint64_t seed = 1;
  int rows = 100;
  int cols = 20;
  std::string output;
  std::string token = "NA";
  std::string delimiter = ",";
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  MaskSpec spec;
  spec.mechanism = parse_mechanism(args.mechanism);
  spec.rate = parse_ratio(args.rate);
  spec.seed = args.seed;
  spec.rows = args.rows;
  spec.cols = args.cols;
  spec.validate();
  IngestArgs ingest;
  ingest.delimiter = args.delimiter;
  const char delimiter = ingest.config(Ratio::zero()).delimiter;
  const SyntheticData data = generate(spec);
  std::ofstream file(args.output, std::ios::binary);
  if (!file) throw DataError("cannot write " + args.output);
  data.write(file, delimiter, args.token);
  std::size_t missing = 0;
  for (const bool b : data.missing) missing += b ? 1 : 0;
  out << "wrote " << args.rows << " x " << args.cols << " ("
      << mechanism_name(spec.mechanism) << ", " << missing
      << " missing cells) to " << args.output << "\n";
  return kOk;
}

struct ExportArgs {
  std::string input;
  std::string gamma = "0";
  std::string model = "rowcol";
  std::string output;
  IngestArgs ingest;
};

int cmd_export(const ExportArgs& args, std::ostream& out) {
  const Ratio gamma = parse_fraction_below_one(args.gamma, "gamma");
  if (args.model != "rowcol" && args.model != "element") {
    throw UsageError("--model must be 'rowcol' or 'element'");
  }
  const CleanConfig config = args.ingest.config(gamma);
  const ValidityMask mask = load_matrix(args.input, config);
  const std::string text = args.model == "rowcol"
                               ? export_rowcol_ip(mask, gamma)
                               : export_element_ip(mask, gamma);
  write_model(args.output, text);
  out << "wrote " << args.model << " model (" << mask.rows() << " x "
      << mask.cols() << ", gamma " << gamma.to_string() << ") to "
      << args.output << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Remove excess missing data by selecting rows and columns to keep",
               "nomiss"};
  app.require_subcommand(1);

  CleanArgs clean;
  auto* clean_cmd = app.add_subcommand("clean", "Clean one delimited file");
  clean_cmd->add_option("-i,--input", clean.input, "Input file")
      ->required()
      ->check(CLI::ExistingFile);
  clean_cmd->add_option("-g,--gamma", clean.gamma,
                        "Max missing fraction per kept row and column "
                        "(automiss: whole-matrix threshold)")
      ->capture_default_str();
  clean_cmd->add_option("-a,--algorithm", clean.algorithm,
                        "mrclean-greedy|nomiss-greedy|combined|rowcol-lp|"
                        "maxcol|listwise|featurewise|naive|automiss")
      ->required();
  clean_cmd->add_option("-o,--output", clean.output, "Cleaned output file");
  clean_cmd->add_option("-r,--report", clean.report,
                        "JSON report file (default: print to stdout)");
  clean_cmd->add_option("--time-budget", clean.time_budget,
                        "maxcol time budget in seconds")
      ->capture_default_str();
  clean.ingest.add_to(*clean_cmd);
  clean.solver.add_to(*clean_cmd);

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Run algorithms across files and gammas");
  bench_cmd->add_option("--inputs", bench.inputs, "Files or directories")
      ->required();
  bench_cmd->add_option("--gammas", bench.gammas, "Gamma values")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "Algorithms (default: all)")
      ->delimiter(',');
  bench_cmd->add_option("--timeout", bench.timeout, "Per-run limit in seconds")
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "CSV results table");
  bench_cmd->add_option("--jsonl", bench.jsonl, "JSON-lines results");
  bench.ingest.add_to(*bench_cmd);
  bench.solver.add_to(*bench_cmd);

  GenArgs gen;
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate a synthetic matrix with missing data");
  gen_cmd->add_option("--mechanism", gen.mechanism, "mcar|mar|mnar")
      ->capture_default_str();
  gen_cmd->add_option("--rate", gen.rate, "Missing rate in [0, 1)")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--rows", gen.rows)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output)->required();
  gen_cmd->add_option("--token", gen.token, "Missing-value token")
      ->capture_default_str();
  gen_cmd->add_option("-d,--delimiter", gen.delimiter)->capture_default_str();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand(
      "export", "Write the RowCol or Element integer program in LP format");
  export_cmd->add_option("-i,--input", exp.input)
      ->required()
      ->check(CLI::ExistingFile);
  export_cmd->add_option("-g,--gamma", exp.gamma)->capture_default_str();
  export_cmd->add_option("--model", exp.model, "rowcol|element")
      ->capture_default_str();
  export_cmd->add_option("-o,--output", exp.output)->required();
  exp.ingest.add_to(*export_cmd);

  std::vector<std::string> owned(args);
  if (owned.empty()) owned.emplace_back("nomiss");
  std::vector<char*> argv;
  for (auto& a : owned) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (clean_cmd->parsed()) return cmd_clean(clean, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (export_cmd->parsed()) return cmd_export(exp, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace nomiss::cli
