#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

struct GenSpec {
  int n = 0;
  double p = 0.0;
  std::int64_t wmax = 1;
  bool directed = false;
};

// "gnp:n,p,wmax[,directed]"; throws std::invalid_argument on malformed specs.
GenSpec parse_gen_spec(const std::string& spec);

struct RunConfig {
  std::string graph_path;        // exactly one of graph_path / gen
  std::optional<GenSpec> gen;
  int h = 0;                     // 0 selects the default hop bound
  std::uint64_t seed = 0;
  std::string out_path;          // empty writes to `out`
  std::string trace_path;
  bool verify = false;
};

struct BenchConfig {
  std::vector<int> ns;
  std::vector<std::uint64_t> seeds;
  double p = 0.3;
  std::int64_t wmax = 10;
  bool directed = false;
  int h = 0;
};

// Exit codes: 0 success / verify pass, 1 usage error, 2 verify fail,
// 3 engine invariant abort.
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_generate(const GenSpec& spec, std::uint64_t seed, const std::string& out_path,
                 std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace congest
