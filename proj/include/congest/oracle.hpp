#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "congest/apsp.hpp"
#include "congest/graph.hpp"
#include "congest/primitives.hpp"

namespace congest {
// Sequential ground truths and structural checkers. These are independent of
// the simulator code paths they verify.
namespace oracle {

// Floyd-Warshall over the weighted arcs; INF for unreachable pairs.
DistanceMatrix oracle_apsp(const WeightedDigraph& g);

// Hop-bounded dynamic program d[k][v]; returns min over k <= h, indexed 1..n.
std::vector<Distance> oracle_hhop(const WeightedDigraph& g, NodeId root, int h);

// score_x(v) by explicit enumeration of depth-h root-to-leaf paths whose
// vertices avoid every blocker in `q`. Result is [tree index][v].
std::vector<std::vector<std::int64_t>> oracle_scores(std::span<const HopTree> trees,
                                                     std::span<const NodeId> q, int h);

// Count of surviving depth-h root-to-leaf paths across all trees.
std::int64_t count_paths(std::span<const HopTree> trees, std::span<const NodeId> q, int h);

struct CoverageResult {
  bool ok = true;
  NodeId tree_root = 0;
  std::vector<NodeId> witness_path;  // first uncovered root-to-leaf path
};
CoverageResult oracle_blocker_check(std::span<const HopTree> trees, std::span<const NodeId> q,
                                    int h);

// Union of tree paths from each root x to c must form an in-tree rooted at
// c: every vertex on the union has at most one outgoing edge toward c.
struct IntreeResult {
  bool ok = true;
  NodeId vertex = 0;  // witness with two outgoing edges
};
IntreeResult intree_check(std::span<const HopTree> trees, NodeId c);

// Structural validation of one hop tree against the graph and the h-hop
// distance oracle (parent edges exist, hop arithmetic, child lists inverse of
// parents, min-id parent tie-break, exact distances).
struct TreeCheckResult {
  bool ok = true;
  std::string detail;
};
TreeCheckResult check_hop_tree(const WeightedDigraph& g, const HopTree& tree);

struct OracleCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_pass() const;
  std::string text() const;
  std::string json() const;
};

// Full differential verification of one APSP run against the oracles.
OracleReport verify_run(const WeightedDigraph& g, const ApspResult& result);

}  // namespace oracle
}  // namespace congest
