#include "congest/apsp.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace congest {

std::vector<RoundReport> ApspResult::all_reports() const {
  std::vector<RoundReport> all;
  all.insert(all.end(), step1_reports.begin(), step1_reports.end());
  all.insert(all.end(), blocker_reports.begin(), blocker_reports.end());
  all.insert(all.end(), step3_reports.begin(), step3_reports.end());
  all.insert(all.end(), step4_reports.begin(), step4_reports.end());
  return all;
}

RoundReport ApspResult::total() const {
  auto all = all_reports();
  return compose_reports(all, "apsp");
}

int default_hop_bound(int n) {
  if (n < 2) return 1;
  const std::int64_t log_ceil = std::bit_width(static_cast<unsigned>(n - 1));
  const std::int64_t target = static_cast<std::int64_t>(n) * log_ceil;
  std::int64_t h = 1;
  while (h * h < target) ++h;
  return static_cast<int>(std::clamp<std::int64_t>(h, 1, n - 1));
}

std::vector<Distance> combine_distances(std::span<const Distance> hop_to_v,
                                        std::span<const std::pair<NodeId, Distance>> via,
                                        const std::vector<std::vector<Distance>>& hop_to_c) {
  const int n = static_cast<int>(hop_to_v.size()) - 1;
  std::vector<Distance> result(n + 1, Distance::inf());
  for (NodeId u = 1; u <= n; ++u) {
    Distance best = hop_to_v[u];
    for (std::size_t i = 0; i < via.size(); ++i)
      best = std::min(best, hop_to_c[i][u] + via[i].second);
    result[u] = best;
  }
  return result;
}

ApspResult run_apsp(const WeightedDigraph& g, const ApspConfig& cfg,
                    const BlockerObserver& observer) {
  const int n = g.n();
  const int h = cfg.h != 0 ? cfg.h : default_hop_bound(n);
  if (h < 1 || h > n - 1) throw std::invalid_argument("run_apsp requires 1 <= h <= n-1");

  ApspResult res;
  res.h = h;

  // Step 1: h-hop SSSP tree for every root, ascending.
  res.trees.reserve(n);
  for (NodeId root = 1; root <= n; ++root) {
    auto [tree, report] = hhop_sssp(g, root, h);
    res.trees.push_back(std::move(tree));
    res.step1_reports.push_back(std::move(report));
  }

  // Step 2: blocker set for the tree collection.
  {
    auto [blockers, state, reports] = compute_blocker(g, res.trees, h, observer);
    res.blockers = std::move(blockers);
    res.blocker_reports = std::move(reports);
  }
  std::vector<NodeId> q_sorted = res.blockers.q;
  std::sort(q_sorted.begin(), q_sorted.end());

  // Step 3: full SSSP from every blocker, ascending. Node v learns delta(c,v).
  std::vector<std::vector<Distance>> sssp_from(q_sorted.size());
  for (std::size_t i = 0; i < q_sorted.size(); ++i) {
    auto [dist, report] = full_sssp(g, q_sorted[i]);
    sssp_from[i] = std::move(dist);
    res.step3_reports.push_back(std::move(report));
  }

  // Step 4: every blocker c broadcasts the delta_h(v,c) column it ended up
  // holding after Step 1, infinity encoded as the reserved sentinel.
  std::vector<std::vector<Distance>> hop_to(q_sorted.size());
  for (std::size_t i = 0; i < q_sorted.size(); ++i) {
    const NodeId c = q_sorted[i];
    std::vector<std::int64_t> values(n);
    for (NodeId v = 1; v <= n; ++v) values[v - 1] = res.trees[v - 1].dist[c].value;
    auto [received, report] =
        pipelined_broadcast(g, c, values, "hop-bcast[" + std::to_string(c) + "]");
    for (NodeId v = 1; v <= n; ++v)
      if (received[v] != values)
        throw std::logic_error("hop distance broadcast mismatch at node " + std::to_string(v));
    hop_to[i].assign(n + 1, Distance::inf());
    for (NodeId u = 1; u <= n; ++u) hop_to[i][u] = Distance::of(values[u - 1]);
    res.step4_reports.push_back(std::move(report));
  }

  // Step 5: local combine at every node; node v holds column delta(.,v).
  res.dist = DistanceMatrix::make(n);
  std::vector<Distance> hop_to_v(n + 1);
  std::vector<std::pair<NodeId, Distance>> via(q_sorted.size());
  for (NodeId v = 1; v <= n; ++v) {
    for (NodeId u = 1; u <= n; ++u) hop_to_v[u] = res.trees[u - 1].dist[v];
    for (std::size_t i = 0; i < q_sorted.size(); ++i) via[i] = {q_sorted[i], sssp_from[i][v]};
    std::vector<Distance> column = combine_distances(hop_to_v, via, hop_to);
    for (NodeId u = 1; u <= n; ++u) res.dist.at(u, v) = column[u];
  }
  return res;
}

std::string matrix_tsv(const DistanceMatrix& m) {
  std::ostringstream out;
  for (NodeId u = 1; u <= m.n; ++u) {
    for (NodeId v = 1; v <= m.n; ++v) {
      if (v > 1) out << '\t';
      out << to_string(m.at(u, v));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace congest
