// Copyright 2026 The qsweep Authors
//
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsweep/cli.hpp"
#include "qsweep/data.hpp"
#include "qsweep/report.hpp"
#include "qsweep/result_io.hpp"
#include "qsweep/sweep.hpp"

using namespace qsweep;

namespace {

const std::string kD1 = std::string(QSWEEP_TEST_DATA_DIR) + "/d1.csv";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qsweep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qsweep_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> ot_args() {
  return {"otsweep", "--input", kD1, "--id-col", "id", "--outcome", "Y", "--conditions", "A,B",
          "--sweep-range", "2:3", "--thrx", "A=2,B=2"};
}

}  // namespace

TEST_CASE("otsweep writes the result file and prints the summary") {
  auto args = ot_args();
  auto out = tmp("r.json");
  args.insert(args.end(), {"--out", out});
  auto r = run(args);
  REQUIRE(r.code == 0);
  CHECK(r.out.find(" thrY  expression inclS  covS n_solutions\n") != std::string::npos);
  auto res = import_result(out);
  REQUIRE(res.summary.size() == 2);
  CHECK(res.summary[0].expression == "A + B");
  CHECK(res.summary[1].expression == "A*B");

  // Same parameters through the library give the same bytes.
  auto raw = load_csv(kD1, std::string("id"));
  auto lib = ot_sweep(raw, OutcomeSpec::parse("Y"), {"A", "B"}, {2, 3}, {{"A", 2}, {"B", 2}});
  CHECK(slurp(out) == to_json(lib));
  CHECK(r.out == print_summary(lib));
  std::filesystem::remove(out);
}

TEST_CASE("each sweep subcommand runs") {
  CHECK(run({"ctsweeps", "--input", kD1, "--id-col", "id", "--outcome", "Y", "--conditions", "A,B",
             "--sweep-var", "B", "--sweep-range", "2:3", "--thry", "2", "--thrx-default", "2"})
            .code == 0);
  CHECK(run({"ctsweepm", "--input", kD1, "--id-col", "id", "--outcome", "~Y", "--conditions",
             "A,B", "--sweep-list", "A=2:3,B=2:3", "--thry", "2"})
            .code == 0);
  auto dt = run({"dtsweep", "--input", kD1, "--id-col", "id", "--outcome", "Y", "--conditions",
                 "A,B", "--sweep-list-x", "A=2,B=2", "--sweep-range-y", "2:3", "--include",
                 "remainders", "--dir-exp", "1,-", "--details", "--threads", "2"});
  CHECK(dt.code == 0);
  CHECK(dt.out.rfind("Dual Threshold Sweep Summary", 0) == 0);
}

TEST_CASE("report subcommand regenerates the same report") {
  auto args = ot_args();
  auto out = tmp("rr.json"), rep1 = tmp("r1.md"), rep2 = tmp("r2.md");
  args.insert(args.end(), {"--details", "--out", out, "--report", rep1, "--timestamp", "T0"});
  auto r = run(args);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Report generated: " + rep1) != std::string::npos);
  auto r2 = run({"report", "--input", out, "--report", rep2, "--timestamp", "T0", "--dataset",
                 kD1, "--id-col", "id"});
  REQUIRE(r2.code == 0);
  CHECK(slurp(rep1) == slurp(rep2));
  for (const auto& p : {out, rep1, rep2}) std::filesystem::remove(p);
}

TEST_CASE("exit codes") {
  auto args = ot_args();
  args.insert(args.end(), {"--dir-exp", "1,1", "--include", "none"});
  auto r = run(args);
  CHECK(r.code == 1);
  CHECK(r.err.find("directional expectations require remainder inclusion") != std::string::npos);

  args = ot_args();
  args.insert(args.end(), {"--dir-exp", "1,1,1", "--include", "remainders"});
  CHECK(run(args).code == 1);

  args = ot_args();
  args[2] = "/nonexistent/missing.csv";
  CHECK(run(args).code == 3);

  args = ot_args();
  args[10] = "3:2";
  CHECK(run(args).code == 1);

  args = ot_args();
  args.push_back("--bogus");
  CHECK(run(args).code == 1);

  args = ot_args();
  args[6] = "Q";
  CHECK(run(args).code == 2);

  CHECK(run({"ctsweeps", "--input", kD1, "--id-col", "id", "--outcome", "Y", "--conditions", "A,B",
             "--sweep-var", "Z", "--sweep-range", "2", "--thry", "2", "--thrx-default", "2"})
            .code == 2);
  CHECK(run({}).code == 1);

  args = ot_args();
  args.insert(args.end(), {"--out", "/nonexistent/dir/r.json"});
  CHECK(run(args).code == 3);
}

TEST_CASE("help lists every flag") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* flag :
       {"--input", "--id-col", "--outcome", "--conditions", "--incl-cut", "--n-cut", "--include",
        "--dir-exp", "--details", "--out", "--report", "--title", "--format", "--chart",
        "--symbols", "--sweep-range", "--thrx", "--sweep-var", "--thry", "--thrx-default",
        "--sweep-list", "--sweep-list-x", "--sweep-range-y", "otsweep", "ctsweeps", "ctsweepm",
        "dtsweep", "report"}) {
    CHECK_MESSAGE(r.out.find(flag) != std::string::npos, flag);
  }
  CHECK(run({"otsweep", "--help"}).code == 0);
}
