#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "congest/blocker.hpp"
#include "congest/engine.hpp"
#include "congest/graph.hpp"
#include "congest/primitives.hpp"

namespace congest {

struct DistanceMatrix {
  int n = 0;
  std::vector<Distance> cells;  // row-major, (u-1)*n + (v-1)

  static DistanceMatrix make(int n) { return {n, std::vector<Distance>(std::size_t(n) * n)}; }
  Distance& at(NodeId u, NodeId v) { return cells[std::size_t(u - 1) * n + (v - 1)]; }
  Distance at(NodeId u, NodeId v) const { return cells[std::size_t(u - 1) * n + (v - 1)]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;
};

struct ApspConfig {
  int h = 0;  // 0 selects the default hop bound
};

struct ApspResult {
  DistanceMatrix dist;
  BlockerSet blockers;
  std::vector<HopTree> trees;
  int h = 0;

  // Per-phase reports, grouped by pipeline step.
  std::vector<RoundReport> step1_reports;    // n h-hop SSSP trees
  std::vector<RoundReport> blocker_reports;  // scores, ancestors, updates, broadcasts
  std::vector<RoundReport> step3_reports;    // per-blocker full SSSP
  std::vector<RoundReport> step4_reports;    // per-blocker value broadcast

  std::vector<RoundReport> all_reports() const;
  RoundReport total() const;
};

// ceil(sqrt(n * ceil(log2 n))) clamped to [1, n-1].
int default_hop_bound(int n);

// Local combine at one node v: delta(u,v) = min(delta_h(u,v),
// min_c delta_h(u,c) + delta(c,v)) with saturating addition. `hop_to_v` is
// indexed 1..n; `hop_to_c[i]` is the broadcast table for via[i].first.
std::vector<Distance> combine_distances(
    std::span<const Distance> hop_to_v,
    std::span<const std::pair<NodeId, Distance>> via,
    const std::vector<std::vector<Distance>>& hop_to_c);

ApspResult run_apsp(const WeightedDigraph& g, const ApspConfig& cfg,
                    const BlockerObserver& observer = nullptr);

// TSV rendering: n rows, tab-separated columns, INF for infinity.
std::string matrix_tsv(const DistanceMatrix& m);

}  // namespace congest
