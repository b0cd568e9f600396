#include "congest/blocker.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace congest {

namespace {

constexpr std::int32_t kScore = 10;
constexpr std::int32_t kAncId = 11;
constexpr std::int32_t kUpdate = 12;

void require_sorted_roots(std::span<const HopTree> trees) {
  for (std::size_t t = 1; t < trees.size(); ++t)
    if (trees[t - 1].root >= trees[t].root)
      throw std::invalid_argument("trees must be ordered by ascending root id");
}

}  // namespace

bool ScoreState::is_ancestor(std::size_t t, NodeId a, NodeId v) const {
  const auto& set = anc[t][v];
  return std::binary_search(set.begin(), set.end(), a);
}

std::pair<std::vector<std::vector<std::int64_t>>, std::vector<RoundReport>> init_scores(
    const WeightedDigraph& g, std::span<const HopTree> trees, int h) {
  require_sorted_roots(trees);
  const int n = g.n();
  std::vector<std::vector<std::int64_t>> score(trees.size());
  std::vector<RoundReport> reports;
  reports.reserve(trees.size());

  for (std::size_t t = 0; t < trees.size(); ++t) {
    const HopTree& tree = trees[t];
    std::vector<std::int64_t> init(n + 1, 0);
    for (NodeId v = 1; v <= n; ++v)
      if (tree.hops[v] == h) init[v] = 1;

    auto [states, report] = run_phase(
        g, "scores[" + std::to_string(tree.root) + "]", std::move(init), h,
        [&](NodeId v, std::int64_t& sc, std::int64_t r, std::span<const Incoming> inbox,
            std::vector<Outgoing>& out) {
          // A non-root node forwards its subtree count in round h-hops+1, so
          // anything arriving later would be dropped. That only happens when
          // a child's hop label is not the parent's plus one, i.e. the hop
          // tree is improper; abort rather than undercount.
          if (!inbox.empty() && tree.hops[v] >= 1 && r > h - tree.hops[v] + 1)
            throw std::logic_error("improper hop tree rooted at " + std::to_string(tree.root) +
                                   ": score message reached node " + std::to_string(v) +
                                   " after its forwarding round");
          for (const Incoming& in : inbox) sc += in.msg.a;
          if (r <= h && tree.hops[v] >= 1 && r == h - tree.hops[v] + 1 && sc > 0)
            out.push_back({tree.parent[v], {kScore, sc, 0}});
        });
    score[t] = std::move(states);
    reports.push_back(std::move(report));
  }
  return {std::move(score), std::move(reports)};
}

std::pair<std::vector<std::vector<std::vector<NodeId>>>, std::vector<RoundReport>>
compute_ancestors(const WeightedDigraph& g, std::span<const HopTree> trees, int h) {
  require_sorted_roots(trees);
  const int n = g.n();
  std::vector<std::vector<std::vector<NodeId>>> anc(trees.size());
  std::vector<RoundReport> reports;
  reports.reserve(trees.size());

  for (std::size_t t = 0; t < trees.size(); ++t) {
    const HopTree& tree = trees[t];
    auto [states, report] = run_phase(
        g, "ancestors[" + std::to_string(tree.root) + "]",
        std::vector<std::vector<NodeId>>(n + 1), h,
        [&](NodeId v, std::vector<NodeId>& set, std::int64_t r,
            std::span<const Incoming> inbox, std::vector<Outgoing>& out) {
          NodeId relay = 0;
          if (!inbox.empty()) {
            relay = static_cast<NodeId>(inbox[0].msg.a);
            set.push_back(relay);
          }
          if (r > h) return;
          if (r == 1) relay = v;
          if (relay != 0)
            for (NodeId child : tree.children[v]) out.push_back({child, {kAncId, relay, 0}});
        });
    for (auto& set : states) std::sort(set.begin(), set.end());
    anc[t] = std::move(states);
    reports.push_back(std::move(report));
  }
  return {std::move(anc), std::move(reports)};
}

void descendant_update(ScoreState& state, std::span<const HopTree> trees, NodeId c) {
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (NodeId v = 1; v < static_cast<NodeId>(state.total.size()); ++v) {
      if (state.total[v] != 0 && state.score[t][v] != 0 && state.is_ancestor(t, c, v)) {
        state.total[v] -= state.score[t][v];
        state.score[t][v] = 0;
      }
    }
  }
}

std::pair<std::vector<std::pair<NodeId, std::int64_t>>, RoundReport> ancestor_update(
    const WeightedDigraph& g, std::span<const HopTree> trees, ScoreState& state, NodeId c,
    std::span<const NodeId> q) {
  const int n = g.n();
  const int h = trees.empty() ? 1 : trees[0].h;

  std::map<NodeId, std::size_t> tree_of_root;
  for (std::size_t t = 0; t < trees.size(); ++t) tree_of_root[trees[t].root] = t;

  // Local step at c: list_c in ascending root order, then zero c's scores.
  std::vector<std::pair<NodeId, std::int64_t>> entries;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    if (trees[t].root != c && state.score[t][c] != 0)
      entries.push_back({trees[t].root, state.score[t][c]});
    state.score[t][c] = 0;
  }
  state.total[c] = 0;

  std::vector<char> in_q(n + 1, 0);
  for (NodeId b : q) in_q[b] = 1;

  const std::int64_t budget = n - 1 + h;
  auto [states, report] = run_phase(
      g, "ancestor-update[" + std::to_string(c) + "]", std::vector<char>(n + 1), budget,
      [&](NodeId v, char&, std::int64_t r, std::span<const Incoming> inbox,
          std::vector<Outgoing>& out) {
        if (inbox.size() > 1)
          throw std::logic_error("in-tree violation: node " + std::to_string(v) +
                                 " received two ancestor-update messages in one round");
        if (!inbox.empty() && (in_q[v] || v == c))
          throw std::logic_error("excluded node " + std::to_string(v) +
                                 " received an ancestor-update message");
        if (!inbox.empty()) {
          NodeId x = static_cast<NodeId>(inbox[0].msg.a);
          std::int64_t s = inbox[0].msg.b;
          std::size_t t = tree_of_root.at(x);
          state.score[t][v] -= s;
          state.total[v] -= s;
          if (v != x && r <= budget) out.push_back({trees[t].parent[v], inbox[0].msg});
        }
        if (v == c && r <= static_cast<std::int64_t>(entries.size())) {
          auto [x, s] = entries[r - 1];
          out.push_back({trees[tree_of_root.at(x)].parent[c], {kUpdate, x, s}});
        }
      });
  return {std::move(entries), std::move(report)};
}

NodeId select_max_score(std::span<const std::int64_t> total) {
  NodeId best = 0;
  std::int64_t best_score = 0;
  for (NodeId v = 1; v < static_cast<NodeId>(total.size()); ++v)
    if (total[v] > best_score) {
      best_score = total[v];
      best = v;
    }
  return best;
}

std::tuple<BlockerSet, ScoreState, std::vector<RoundReport>> compute_blocker(
    const WeightedDigraph& g, std::span<const HopTree> trees, int h,
    const BlockerObserver& observer) {
  require_sorted_roots(trees);
  const int n = g.n();
  std::vector<RoundReport> reports;

  ScoreState state;
  {
    auto [score, reps] = init_scores(g, trees, h);
    state.score = std::move(score);
    reports.insert(reports.end(), reps.begin(), reps.end());
  }
  {
    auto [anc, reps] = compute_ancestors(g, trees, h);
    state.anc = std::move(anc);
    reports.insert(reports.end(), reps.begin(), reps.end());
  }
  state.total.assign(n + 1, 0);
  for (const auto& per_tree : state.score)
    for (NodeId v = 1; v <= n; ++v) state.total[v] += per_tree[v];

  // The relay delivers the k-th ancestor in round k+1, root last, so a parent
  // chain longer than h never finishes within the budget. Incomplete sets are
  // harmless at score-zero nodes (descendant_update never consults them) but
  // fatal where counting paths survive; abort rather than miss a descendant.
  for (std::size_t t = 0; t < trees.size(); ++t)
    for (NodeId v = 1; v <= n; ++v)
      if (state.score[t][v] > 0 && v != trees[t].root &&
          !std::binary_search(state.anc[t][v].begin(), state.anc[t][v].end(), trees[t].root))
        throw std::logic_error("improper hop tree rooted at " + std::to_string(trees[t].root) +
                               ": ancestor relay never reached node " + std::to_string(v));

  auto broadcast_scores = [&](int iteration) {
    auto [received, report] =
        all_to_all_broadcast(g, state.total, "scores-bcast[" + std::to_string(iteration) + "]");
    for (NodeId v = 1; v <= n; ++v)
      if (received[v] != state.total)
        throw std::logic_error("score broadcast mismatch at node " + std::to_string(v));
    reports.push_back(std::move(report));
  };
  broadcast_scores(0);

  BlockerSet result;
  for (int iteration = 1;; ++iteration) {
    NodeId c = select_max_score(state.total);
    if (c == 0) break;

    BlockerSelection sel;
    sel.c = c;
    sel.score_at_selection = state.total[c];
    sel.iteration = iteration;

    descendant_update(state, trees, c);
    auto [entries, report] = ancestor_update(g, trees, state, c, result.q);
    sel.entries = std::move(entries);
    reports.push_back(std::move(report));

    result.q.push_back(c);
    result.selections.push_back(std::move(sel));
    broadcast_scores(iteration);
    if (observer) observer(iteration, c, state, result);
  }
  return {std::move(result), std::move(state), std::move(reports)};
}

}  // namespace congest
