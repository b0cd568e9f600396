#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "congest/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Round-synchronous CONGEST simulator: exact weighted APSP via blocker sets"};
  app.require_subcommand(1);
  // Long-only help so that --h stays available as the hop-bound option.
  app.set_help_flag("--help", "Print help");

  congest::RunConfig run_cfg;
  std::string run_gen, verify_gen;

  CLI::App* run = app.add_subcommand("run", "Compute the full distance matrix");
  run->set_help_flag("--help", "Print help");
  run->add_option("--graph", run_cfg.graph_path, "Edge-list graph file");
  run->add_option("--gen", run_gen, "Generator spec gnp:n,p,wmax[,directed]");
  run->add_option("--h", run_cfg.h, "Hop bound (default: ceil(sqrt(n log n)))");
  run->add_option("--seed", run_cfg.seed, "Generator seed");
  run->add_option("--out", run_cfg.out_path, "Distance matrix TSV path (default: stdout)");
  run->add_option("--trace", run_cfg.trace_path, "Per-phase trace JSON-lines path");
  run->add_flag("--verify", run_cfg.verify, "Check the run against the sequential oracles");

  congest::GenSpec gen_spec;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded connected G(n,p) graph");
  gen->set_help_flag("--help", "Print help");
  gen->add_option("--n", gen_spec.n, "Node count")->required();
  gen->add_option("--p", gen_spec.p, "Edge probability")->required();
  gen->add_option("--wmax", gen_spec.wmax, "Maximum edge weight");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output path (default: stdout)");
  gen->add_flag("--directed", gen_spec.directed, "Generate a directed graph");

  congest::BenchConfig bench_cfg;
  CLI::App* bench = app.add_subcommand("bench", "Round-count scaling table (CSV)");
  bench->set_help_flag("--help", "Print help");
  bench->add_option("--n", bench_cfg.ns, "Node counts");
  bench->add_option("--seed", bench_cfg.seeds, "Seeds (one run per n x seed)");
  bench->add_option("--p", bench_cfg.p, "Edge probability");
  bench->add_option("--wmax", bench_cfg.wmax, "Maximum edge weight");
  bench->add_option("--h", bench_cfg.h, "Hop bound override");
  bench->add_flag("--directed", bench_cfg.directed, "Directed instances");

  congest::RunConfig verify_cfg;
  CLI::App* verify = app.add_subcommand("verify", "Run and report every oracle check");
  verify->set_help_flag("--help", "Print help");
  verify->add_option("--graph", verify_cfg.graph_path, "Edge-list graph file");
  verify->add_option("--gen", verify_gen, "Generator spec gnp:n,p,wmax[,directed]");
  verify->add_option("--h", verify_cfg.h, "Hop bound");
  verify->add_option("--seed", verify_cfg.seed, "Generator seed");
  verify->add_option("--out", verify_cfg.out_path, "Report JSON path");
  verify->add_option("--trace", verify_cfg.trace_path, "Per-phase trace JSON-lines path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!run_gen.empty()) run_cfg.gen = congest::parse_gen_spec(run_gen);
    if (!verify_gen.empty()) verify_cfg.gen = congest::parse_gen_spec(verify_gen);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (bench_cfg.seeds.empty()) bench_cfg.seeds.push_back(0);

  if (run->parsed()) return congest::cmd_run(run_cfg, std::cout, std::cerr);
  if (gen->parsed()) return congest::cmd_generate(gen_spec, gen_seed, gen_out, std::cout, std::cerr);
  if (bench->parsed()) return congest::cmd_bench(bench_cfg, std::cout, std::cerr);
  if (verify->parsed()) return congest::cmd_verify(verify_cfg, std::cout, std::cerr);
  return 1;
}
