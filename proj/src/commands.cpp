#include "congest/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "congest/apsp.hpp"
#include "congest/oracle.hpp"

namespace congest {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GenSpec parse_gen_fields(const std::string& body) {
  std::vector<std::string> fields;
  std::stringstream ss(body);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (fields.size() < 3 || fields.size() > 4)
    throw std::invalid_argument("generator spec needs n,p,wmax[,directed]");
  GenSpec spec;
  std::size_t pos = 0;
  spec.n = std::stoi(fields[0], &pos);
  if (pos != fields[0].size()) throw std::invalid_argument("bad n in generator spec");
  spec.p = std::stod(fields[1], &pos);
  if (pos != fields[1].size()) throw std::invalid_argument("bad p in generator spec");
  spec.wmax = std::stoll(fields[2], &pos);
  if (pos != fields[2].size()) throw std::invalid_argument("bad wmax in generator spec");
  if (fields.size() == 4) {
    if (fields[3] == "directed")
      spec.directed = true;
    else if (fields[3] == "undirected")
      spec.directed = false;
    else
      throw std::invalid_argument("generator spec direction must be directed|undirected");
  }
  return spec;
}

WeightedDigraph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_path.empty() && cfg.gen)
    throw UsageError("give either --graph or --gen, not both");
  if (!cfg.graph_path.empty()) {
    std::ifstream in(cfg.graph_path);
    if (!in) throw UsageError("cannot open graph file: " + cfg.graph_path);
    return parse_graph(in);
  }
  if (cfg.gen)
    return generate_gnp(cfg.gen->n, cfg.gen->p, cfg.gen->wmax, cfg.seed, cfg.gen->directed);
  throw UsageError("no graph source: give --graph or --gen");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write to " + path);
  out << content;
}

struct StepRounds {
  std::int64_t step1 = 0, blocker = 0, sssp = 0, bcast = 0, total = 0;
};

StepRounds step_rounds(const ApspResult& res) {
  auto sum = [](const std::vector<RoundReport>& reports) {
    std::int64_t rounds = 0;
    for (const RoundReport& r : reports) rounds += r.rounds;
    return rounds;
  };
  StepRounds s;
  s.step1 = sum(res.step1_reports);
  s.blocker = sum(res.blocker_reports);
  s.sssp = sum(res.step3_reports);
  s.bcast = sum(res.step4_reports);
  s.total = s.step1 + s.blocker + s.sssp + s.bcast;
  return s;
}

struct RunOutput {
  ApspResult result;
  std::string trace;  // JSON lines: phase reports then selection audit records
};

RunOutput execute(const WeightedDigraph& g, const RunConfig& cfg) {
  ApspConfig acfg;
  acfg.h = cfg.h;
  RunOutput out;
  out.result = run_apsp(g, acfg);

  std::ostringstream trace;
  for (const RoundReport& r : out.result.all_reports()) trace << report_json(r) << '\n';
  for (const BlockerSelection& sel : out.result.blockers.selections)
    trace << "{\"c\": " << sel.c << ", \"score\": " << sel.score_at_selection
          << ", \"iteration\": " << sel.iteration << ", \"list_len\": " << sel.entries.size()
          << "}\n";
  out.trace = trace.str();
  return out;
}

void print_summary(const ApspResult& res, std::ostream& out) {
  StepRounds s = step_rounds(res);
  out << "rounds: trees=" << s.step1 << " blocker=" << s.blocker << " sssp=" << s.sssp
      << " broadcast=" << s.bcast << " total=" << s.total << '\n';
  out << "|Q| = " << res.blockers.q.size() << " (h = " << res.h << ")\n";
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const EngineViolation& e) {
    err << "engine abort: " << e.what() << '\n';
    return 3;
  } catch (const std::logic_error& e) {
    err << "engine abort: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace

GenSpec parse_gen_spec(const std::string& spec) {
  if (!spec.starts_with("gnp:")) throw std::invalid_argument("generator spec must start with gnp:");
  return parse_gen_fields(spec.substr(4));
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WeightedDigraph g = load_graph(cfg);
    RunOutput run = execute(g, cfg);

    std::string tsv = matrix_tsv(run.result.dist);
    if (cfg.out_path.empty())
      out << tsv;
    else
      write_file(cfg.out_path, tsv);
    if (!cfg.trace_path.empty()) write_file(cfg.trace_path, run.trace);

    print_summary(run.result, out);
    if (cfg.verify) {
      oracle::OracleReport report = oracle::verify_run(g, run.result);
      if (report.all_pass()) {
        out << "verify: PASS\n";
      } else {
        out << "verify: FAIL\n";
        err << report.text();
        return 2;
      }
    }
    return 0;
  });
}

int cmd_generate(const GenSpec& spec, std::uint64_t seed, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WeightedDigraph g = generate_gnp(spec.n, spec.p, spec.wmax, seed, spec.directed);
    std::string text = serialize_graph(g);
    if (out_path.empty())
      out << text;
    else
      write_file(out_path, text);
    return 0;
  });
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << "n,seed,h,rounds_total,rounds_step1,rounds_blocker,rounds_sssp,rounds_bcast,Q_size\n";
    double c_max = 0.0;
    for (int n : cfg.ns)
      for (std::uint64_t seed : cfg.seeds) {
        WeightedDigraph g = generate_gnp(n, cfg.p, cfg.wmax, seed, cfg.directed);
        ApspConfig acfg;
        acfg.h = cfg.h;
        ApspResult res = run_apsp(g, acfg);
        StepRounds s = step_rounds(res);
        out << n << ',' << seed << ',' << res.h << ',' << s.total << ',' << s.step1 << ','
            << s.blocker << ',' << s.sssp << ',' << s.bcast << ',' << res.blockers.q.size()
            << '\n';
        if (cfg.h == 0) {
          const double log_ceil = std::ceil(std::log2(static_cast<double>(std::max(n, 2))));
          c_max = std::max(c_max, static_cast<double>(s.total) /
                                      (std::pow(n, 1.5) * std::sqrt(log_ceil)));
        }
      }
    if (c_max > 0.0) err << "C = " << c_max << '\n';
    return 0;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WeightedDigraph g = load_graph(cfg);
    RunOutput run = execute(g, cfg);
    oracle::OracleReport report = oracle::verify_run(g, run.result);
    out << report.text();
    if (!cfg.out_path.empty()) write_file(cfg.out_path, report.json() + "\n");
    if (!cfg.trace_path.empty()) write_file(cfg.trace_path, run.trace);
    out << "verify: " << (report.all_pass() ? "PASS" : "FAIL") << '\n';
    return report.all_pass() ? 0 : 2;
  });
}

}  // namespace congest
