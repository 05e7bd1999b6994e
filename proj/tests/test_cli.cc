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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "nomiss/cli.h"
#include "nomiss/matrix_io.h"

namespace nomiss {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "nomiss");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() /
           ("nomiss_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return (dir_ / name).string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string dir() const { return dir_.string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

TEST_CASE("clean M1 with maxcol") {
  Scratch s;
  const std::string in = s.write("m1.csv", "1,NA,3\n4,5,6\n");
  const Outcome r = call({"clean", "-i", in, "-a", "maxcol", "-g", "0", "-o",
                          s.path("out.csv")});
  REQUIRE(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["objective"] == 4);
  CHECK(report["kept_rows_count"] == 2);
  CHECK(report["kept_cols_count"] == 2);
  CHECK(report["proven_optimal"] == true);
  CHECK(report["status"] == "ok");
  CHECK(slurp(s.path("out.csv")) == "1,3\n4,6\n");
}

TEST_CASE("clean output round trip has no missing cells at gamma 0") {
  Scratch s;
  const std::string in = s.write(
      "t.csv", "id,a,b,c,d\nr1,1,2,NA,4\nr2,5,,7,8\nr3,9,10,11,12\nr4,?,1,2,3\n");
  for (const char* algo : {"mrclean-greedy", "nomiss-greedy", "combined",
                           "rowcol-lp", "maxcol", "listwise", "featurewise",
                           "naive", "automiss"}) {
    CAPTURE(algo);
    const std::string out = s.path(std::string(algo) + ".csv");
    const Outcome r = call({"clean", "-i", in, "-a", algo, "--header",
                            "--row-ids", "-o", out, "-r", s.path("r.json")});
    REQUIRE(r.code == 0);
    CleanConfig config;
    config.has_header = true;
    config.has_row_ids = true;
    const auto report = nlohmann::json::parse(slurp(s.path("r.json")));
    if (report["objective"] == 0) continue;
    CHECK(load_matrix(out, config).total_missing() == 0);
    CHECK(slurp(out).rfind("id,", 0) == 0);
  }
}

TEST_CASE("clean keeps tall inputs in their own orientation") {
  Scratch s;
  const std::string in = s.write("tall.csv", "1,2\nNA,3\n4,5\n6,7\n");
  const Outcome r = call({"clean", "-i", in, "-a", "maxcol", "-o", s.path("o.csv")});
  REQUIRE(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["transposed"] == true);
  CHECK(report["objective"] == 6);
  CHECK(report["m"] == 4);
  CHECK(slurp(s.path("o.csv")) == "1,2\n4,5\n6,7\n");
}

TEST_CASE("all-valid input retains everything") {
  Scratch s;
  const std::string in = s.write("full.csv", "1,2,3\n4,5,6\n");
  for (const char* algo : {"combined", "maxcol", "naive", "mrclean-greedy"}) {
    const Outcome r = call({"clean", "-i", in, "-a", algo});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["percent_valid_retained"] == 1.0);
  }
}

TEST_CASE("clean at a positive gamma") {
  Scratch s;
  const std::string in = s.write("m1.csv", "1,NA,3\n4,5,6\n");
  const Outcome r = call({"clean", "-i", in, "-a", "mrclean-greedy", "-g", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["objective"] == 5);
}

TEST_CASE("usage errors exit 2") {
  Scratch s;
  const std::string in = s.write("m1.csv", "1,NA,3\n4,5,6\n");
  CHECK(call({"clean", "-i", in, "-a", "rowcol-lp", "-g", "0.05"}).code == 2);
  CHECK(call({"clean", "-i", in, "-a", "simplex"}).code == 2);
  CHECK(call({"clean", "-i", in, "-a", "maxcol", "-g", "1"}).code == 2);
  CHECK(call({"clean", "-i", in, "-a", "maxcol", "-g", "abc"}).code == 2);
  CHECK(call({"clean", "-i", in}).code == 2);
  CHECK(call({"clean", "-i", in, "-a", "maxcol", "-d", "::"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"gen", "--rate", "1", "-o", s.path("g.csv")}).code == 2);
  CHECK(call({"bench", "--inputs", s.path("nothing")}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("data errors exit 1") {
  Scratch s;
  const std::string ragged = s.write("bad.csv", "1,2\n3\n");
  const Outcome r = call({"clean", "-i", ragged, "-a", "maxcol"});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  const std::string empty = s.write("empty.csv", "");
  CHECK(call({"clean", "-i", empty, "-a", "maxcol"}).code == 1);
}

TEST_CASE("bench writes one row per run") {
  Scratch s;
  fs::create_directories(s.path("data"));
  s.write("data/m1.csv", "1,NA,3\n4,5,6\n");
  s.write("data/m2.csv", "1,1,1,NA\n1,1,NA,1\n1,1,1,1\n");
  s.write("data/m3.csv", "1,1,1\n1,1,1\n1,NA,1\nNA,1,1\n");
  const Outcome r =
      call({"bench", "--inputs", s.path("data"), "--gammas", "0,0.5", "--csv",
            s.path("r.csv"), "--jsonl", s.path("r.jsonl")});
  REQUIRE(r.code == 0);
  const auto csv = lines_of(slurp(s.path("r.csv")));
  CHECK(csv.size() == 1 + 3 * 2 * 9);
  const auto jsonl = lines_of(slurp(s.path("r.jsonl")));
  REQUIRE(jsonl.size() == 3 * 2 * 9);

  int maxcol_rows = 0;
  for (const auto& line : jsonl) {
    const auto row = nlohmann::json::parse(line);
    const std::string name = row["dataset"];
    if (row["algorithm"] == "maxcol" && row["gamma"] == "0") {
      ++maxcol_rows;
      const int expected = name.find("m1") != std::string::npos ? 4 : 6;
      CHECK(row["objective"] == expected);
    }
    if (row["algorithm"] == "rowcol-lp" && row["gamma"] == "0.5") {
      CHECK(row["status"] == "not-applicable");
    }
    if (row["algorithm"] == "mrclean-greedy" && row["gamma"] == "0.5" &&
        name.find("m1") != std::string::npos) {
      CHECK(row["objective"] == 5);
    }
    if (row["status"] == "ok" && row["gamma"] == "0" && row["feasible"] == true) {
      CHECK(row["objective"] ==
            row["kept_rows_count"].get<int>() * row["kept_cols_count"].get<int>());
    }
  }
  CHECK(maxcol_rows == 3);
  CHECK(r.out.find("best=") != std::string::npos);
  CHECK(r.out.find("gap 0.000%") != std::string::npos);
}

TEST_CASE("gen then clean") {
  Scratch s;
  const std::string out = s.path("g.csv");
  const Outcome g = call({"gen", "--mechanism", "mnar", "--rate", "0.25",
                          "--rows", "8", "--cols", "10", "--seed", "3", "-o", out});
  REQUIRE(g.code == 0);
  CHECK(g.out.find("20 missing cells") != std::string::npos);
  CleanConfig config;
  CHECK(load_matrix(out, config).total_missing() == 20);
  CHECK(call({"clean", "-i", out, "-a", "combined"}).code == 0);

  const std::string again = s.path("g2.csv");
  call({"gen", "--mechanism", "mnar", "--rate", "0.25", "--rows", "8",
        "--cols", "10", "--seed", "3", "-o", again});
  CHECK(slurp(out) == slurp(again));
}

TEST_CASE("export writes LP models") {
  Scratch s;
  const std::string in = s.write("m1.csv", "1,NA,3\n4,5,6\n");
  REQUIRE(call({"export", "-i", in, "-g", "0.05", "-o", s.path("m.lp")}).code == 0);
  const std::string rowcol = slurp(s.path("m.lp"));
  CHECK(rowcol.find(" col1: c1 + 0.475 r0 - 0.025 r1 <= 1") != std::string::npos);
  REQUIRE(call({"export", "-i", in, "--model", "element", "-o", s.path("e.lp")})
              .code == 0);
  CHECK(slurp(s.path("e.lp")).find("link_1_2") != std::string::npos);
  CHECK(call({"export", "-i", in, "--model", "qp", "-o", s.path("q.lp")}).code == 2);
}

TEST_CASE("an exhausted budget still reports the warm start") {
  Scratch s;
  const std::string out = s.path("big.csv");
  REQUIRE(call({"gen", "--rows", "60", "--cols", "300", "--rate", "0.1", "-o", out})
              .code == 0);
  const Outcome r = call({"clean", "-i", out, "-a", "maxcol", "--time-budget",
                          "1e-9", "-w", "2"});
  REQUIRE(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["proven_optimal"] == false);
  CHECK(report["objective"].get<int>() > 0);
  CHECK(r.err.find("time budget expired") != std::string::npos);
}

TEST_CASE("without a warm start an exhausted budget exits 3") {
  Scratch s;
  const std::string out = s.path("big.csv");
  REQUIRE(call({"gen", "--rows", "60", "--cols", "300", "--rate", "0.1", "-o", out})
              .code == 0);
  const Outcome r = call({"clean", "-i", out, "-a", "maxcol", "--time-budget",
                          "1e-9", "--warm-start", "none"});
  CHECK(r.code == 3);
}

}  // namespace
}  // namespace nomiss
