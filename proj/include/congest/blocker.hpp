#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "congest/engine.hpp"
#include "congest/graph.hpp"
#include "congest/primitives.hpp"

namespace congest {

// Per-node blocker bookkeeping over a collection of hop trees. score[t][v] is
// node v's count of surviving depth-h leaves under it in trees[t]; total[v]
// is the sum over trees; anc[t][v] the sorted strict ancestors of v.
struct ScoreState {
  std::vector<std::vector<std::int64_t>> score;  // [tree index][v]
  std::vector<std::int64_t> total;               // [v]
  std::vector<std::vector<std::vector<NodeId>>> anc;

  bool is_ancestor(std::size_t t, NodeId a, NodeId v) const;
};

struct BlockerSelection {
  NodeId c = 0;
  std::int64_t score_at_selection = 0;
  int iteration = 0;
  std::vector<std::pair<NodeId, std::int64_t>> entries;  // list_c: (root x, score_x(c))
};

struct BlockerSet {
  std::vector<NodeId> q;  // selection order
  std::vector<BlockerSelection> selections;
};

// Called after each selection with the post-update score state.
using BlockerObserver =
    std::function<void(int iteration, NodeId c, const ScoreState&, const BlockerSet&)>;

// Upward per-tree aggregation of depth-h leaf counts; h rounds per tree.
std::pair<std::vector<std::vector<std::int64_t>>, std::vector<RoundReport>> init_scores(
    const WeightedDigraph& g, std::span<const HopTree> trees, int h);

// Downward per-tree id relay filling the ancestor sets; h rounds per tree.
std::pair<std::vector<std::vector<std::vector<NodeId>>>, std::vector<RoundReport>>
compute_ancestors(const WeightedDigraph& g, std::span<const HopTree> trees, int h);

// Local step: every node that has c as an ancestor in some tree zeroes its
// score for that tree. Zero communication.
void descendant_update(ScoreState& state, std::span<const HopTree> trees, NodeId c);

// Pipelined upward score propagation from the freshly selected blocker c to
// its ancestors in every tree; n-1+h rounds. Returns the audited list_c.
std::pair<std::vector<std::pair<NodeId, std::int64_t>>, RoundReport> ancestor_update(
    const WeightedDigraph& g, std::span<const HopTree> trees, ScoreState& state, NodeId c,
    std::span<const NodeId> q);

// Min-id argmax; 0 when all scores are zero (loop termination).
NodeId select_max_score(std::span<const std::int64_t> total);

std::tuple<BlockerSet, ScoreState, std::vector<RoundReport>> compute_blocker(
    const WeightedDigraph& g, std::span<const HopTree> trees, int h,
    const BlockerObserver& observer = nullptr);

}  // namespace congest
