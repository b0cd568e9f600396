#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"

namespace congest {

// h-hop SSSP tree rooted at `root`: per-node shortest distance over paths of
// at most h edges, the adopted parent, the hop count of the adopted path, and
// the inverse child lists. Unreached nodes keep dist=INF, parent=0, hops=-1.
struct HopTree {
  NodeId root = 0;
  int h = 0;
  std::vector<Distance> dist;
  std::vector<NodeId> parent;
  std::vector<int> hops;
  std::vector<std::vector<NodeId>> children;  // sorted

  bool reached(NodeId v) const { return hops[v] >= 0; }
};

struct BfsTree {
  NodeId root = 0;
  std::vector<NodeId> parent;
  std::vector<int> depth;  // unweighted hops on the undirected topology
  std::vector<std::vector<NodeId>> children;  // populated only when requested
};

// MaxId is a deliberately inconsistent tie-break used as a negative control
// for the in-tree property tests.
enum class TieBreak { kMinId, kMaxId };

// Bellman-Ford limited to h relaxation rounds plus one child-notification
// round; report shows h+1 rounds. Ties broken toward the minimum parent id.
std::pair<HopTree, RoundReport> hhop_sssp(const WeightedDigraph& g, NodeId root, int h,
                                          TieBreak tie = TieBreak::kMinId);

// Unbounded Bellman-Ford; n rounds, distances only.
std::pair<std::vector<Distance>, RoundReport> full_sssp(const WeightedDigraph& g, NodeId root);

// BFS tree on the undirected topology; n rounds. With `with_children` the
// phase takes one extra round for child notifications.
std::pair<BfsTree, RoundReport> bfs_tree(const WeightedDigraph& g, NodeId root,
                                         bool with_children = false);

// Pipelined broadcast of k tagged values from `root` to every node over a BFS
// tree; 2n+k rounds total. Returns each node's received sequence.
std::pair<std::vector<std::vector<std::int64_t>>, RoundReport> pipelined_broadcast(
    const WeightedDigraph& g, NodeId root, const std::vector<std::int64_t>& values,
    std::string_view phase = "pipelined-broadcast");

// Leader-based all-to-all broadcast (BFS from node 1, pipelined convergecast
// to the leader, pipelined broadcast down); 5n rounds. values[v] is node v's
// local value; every node ends holding the full n-vector.
std::pair<std::vector<std::vector<std::int64_t>>, RoundReport> all_to_all_broadcast(
    const WeightedDigraph& g, const std::vector<std::int64_t>& values,
    std::string_view phase = "all-to-all");

}  // namespace congest
