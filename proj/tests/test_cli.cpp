#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt";
  fs::path err = scratch_dir() / "stderr.txt";
  std::string cmd = std::string(CLI_BINARY) + " " + args + " >" + out.string() + " 2>" +
                    err.string();
  int rc = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

fs::path write_graph_b() {
  fs::path p = scratch_dir() / "graph_b.txt";
  std::ofstream(p) << "3 2 undirected\n1 2 5\n2 3 7\n";
  return p;
}

}  // namespace

TEST_CASE("run prints the distance matrix and a summary") {
  CliResult r = run_cli("run --graph " + write_graph_b().string() + " --h 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 16) == "0\t5\t12\n5\t0\t7\n12\t");
  CHECK(r.out.find("rounds: trees=") != std::string::npos);
  CHECK(r.out.find("|Q| = 1 (h = 2)") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("run --verify reports PASS on a clean instance") {
  CliResult r = run_cli("run --gen gnp:16,0.2,1 --seed 1 --h 2 --verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
}

TEST_CASE("hop bound out of range is a usage error") {
  CliResult r = run_cli("run --gen gnp:16,0.2,1 --seed 1 --h 99");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("gen emits the requested graph deterministically") {
  CliResult a = run_cli("gen --n 5 --p 1.0 --wmax 9 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out.substr(0, 16) == "5 10 undirected\n");
  CliResult b = run_cli("gen --n 5 --p 1.0 --wmax 9 --seed 7");
  CHECK(a.out == b.out);
  CliResult c = run_cli("gen --n 5 --p 1.0 --wmax 9 --seed 8");
  CHECK(a.out != c.out);
}

TEST_CASE("gen reports disconnection as a usage error") {
  CliResult r = run_cli("gen --n 4 --p 0.0001 --wmax 9 --seed 1");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("seed=1") != std::string::npos);
}

TEST_CASE("identical runs produce byte-identical artifacts") {
  fs::path out1 = scratch_dir() / "m1.tsv";
  fs::path out2 = scratch_dir() / "m2.tsv";
  fs::path tr1 = scratch_dir() / "t1.jsonl";
  fs::path tr2 = scratch_dir() / "t2.jsonl";
  std::string base = "run --gen gnp:16,0.2,1 --seed 3 --h 2";
  CHECK(run_cli(base + " --out " + out1.string() + " --trace " + tr1.string()).exit_code == 0);
  CHECK(run_cli(base + " --out " + out2.string() + " --trace " + tr2.string()).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(slurp(tr1) == slurp(tr2));
  CHECK(slurp(tr1).substr(0, 10) == "{\"phase\": ");
  CHECK(slurp(tr1).find("\"iteration\": 1") != std::string::npos);
}

TEST_CASE("bench prints one CSV row per instance") {
  CliResult r = run_cli("bench --n 8 --n 12 --seed 3 --p 0.4 --wmax 5");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,seed,h,rounds_total,rounds_step1,rounds_blocker,rounds_sssp,rounds_bcast,Q_size");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
  CHECK(r.err.substr(0, 4) == "C = ");  // default-h constant estimate

  CliResult empty = run_cli("bench");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out ==
        "n,seed,h,rounds_total,rounds_step1,rounds_blocker,rounds_sssp,rounds_bcast,Q_size\n");
}

TEST_CASE("verify exits 2 when an oracle check fails") {
  // preserved counterexample: the run completes but the in-tree check fails
  fs::path report = scratch_dir() / "report.json";
  CliResult r = run_cli("verify --gen gnp:14,0.3,4,directed --seed 15 --h 2 --out " +
                        report.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("apsp-exact: PASS") != std::string::npos);
  CHECK(r.out.find("intree: FAIL") != std::string::npos);
  CHECK(r.out.find("verify: FAIL") != std::string::npos);
  CHECK(slurp(report).find("\"check\": \"intree\", \"pass\": false") != std::string::npos);
}

TEST_CASE("verify exits 0 and writes the report on success") {
  fs::path report = scratch_dir() / "ok.json";
  CliResult r = run_cli("verify --gen gnp:12,0.4,6 --seed 2 --out " + report.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
  CHECK(slurp(report).find("\"pass\": false") == std::string::npos);
}

TEST_CASE("runtime assertion failures exit 3") {
  // preserved counterexample: improper hop trees abort the score pipeline
  CliResult r = run_cli("run --gen gnp:16,0.2,10 --seed 1 --h 2");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("engine abort:") != std::string::npos);
}

TEST_CASE("argument errors exit 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("run --bogus 3").exit_code == 1);
  CHECK(run_cli("run").exit_code == 1);  // no graph source
  CHECK(run_cli("run --graph /nonexistent.txt").exit_code == 1);
  CHECK(run_cli("run --gen pgn:4,0.5,3").exit_code == 1);
  CHECK(run_cli("run --gen gnp:4,0.5").exit_code == 1);
  CHECK(run_cli("gen --n 5").exit_code == 1);  // missing required --p
  CliResult both = run_cli("run --graph " + write_graph_b().string() + " --gen gnp:4,0.5,3");
  CHECK(both.exit_code == 1);
  CHECK(both.err.find("not both") != std::string::npos);
}

TEST_CASE("help is long-form only") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("run --help").exit_code == 0);
}
