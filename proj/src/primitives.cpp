#include "congest/primitives.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace congest {

namespace {

constexpr std::int32_t kRelax = 1;
constexpr std::int32_t kChild = 2;
constexpr std::int32_t kToken = 3;
constexpr std::int32_t kConv = 4;
constexpr std::int32_t kPipe = 5;

struct RelaxState {
  Distance dist;
  int hops = -1;
  NodeId parent = 0;
  std::vector<NodeId> children;
};

// Pipelined dissemination of (a, b) pairs from `root` down an already built
// tree: the root sends the i-th pair to its children in round i, everyone
// else forwards what it received in the previous round.
std::pair<std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>, RoundReport>
pipeline_down(const WeightedDigraph& g, const BfsTree& tree,
              const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
              std::string_view phase, std::int64_t budget) {
  const int n = g.n();
  struct PipeState {
    std::vector<std::pair<std::int64_t, std::int64_t>> received;
  };
  const std::int64_t k = static_cast<std::int64_t>(pairs.size());
  auto [states, report] = run_phase(
      g, phase, std::vector<PipeState>(n + 1), budget,
      [&](NodeId v, PipeState& st, std::int64_t r, std::span<const Incoming> inbox,
          std::vector<Outgoing>& out) {
        if (v == tree.root) {
          if (r <= k)
            for (NodeId child : tree.children[v])
              out.push_back({child, {kPipe, pairs[r - 1].first, pairs[r - 1].second}});
          return;
        }
        for (const Incoming& in : inbox) {
          st.received.push_back({in.msg.a, in.msg.b});
          if (r <= budget)
            for (NodeId child : tree.children[v])
              out.push_back({child, {kPipe, in.msg.a, in.msg.b}});
        }
      });
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> received(n + 1);
  for (NodeId v = 1; v <= n; ++v)
    received[v] = (v == tree.root) ? pairs : std::move(states[v].received);
  return {std::move(received), report};
}

}  // namespace

std::pair<HopTree, RoundReport> hhop_sssp(const WeightedDigraph& g, NodeId root, int h,
                                          TieBreak tie) {
  const int n = g.n();
  if (h < 1 || h > n - 1) throw std::invalid_argument("hhop_sssp requires 1 <= h <= n-1");

  std::vector<RelaxState> init(n + 1);
  init[root].dist = Distance::zero();
  init[root].hops = 0;

  auto [states, report] = run_phase(
      g, "hhop-sssp[" + std::to_string(root) + "]", std::move(init), h + 1,
      [&](NodeId v, RelaxState& st, std::int64_t r, std::span<const Incoming> inbox,
          std::vector<Outgoing>& out) {
        // The parent is recomputed from scratch every round as the tie-break
        // winner among the current achievers of the best known distance, so
        // it never goes stale when an earlier parent later improves along a
        // path that no longer relaxes v.
        Distance best = st.dist;
        for (const Incoming& in : inbox) {
          if (in.msg.tag == kChild) {
            st.children.push_back(in.from);
            continue;
          }
          if (in.msg.b + 1 > h) continue;  // would exceed the hop bound
          best = std::min(best, Distance::of(in.msg.a) + g.arc_weight(in.from, v));
        }
        for (const Incoming& in : inbox) {
          if (in.msg.tag == kChild || in.msg.b + 1 > h) continue;
          if (Distance::of(in.msg.a) + g.arc_weight(in.from, v) != best) continue;
          // Inbox is sorted by sender, so with min-id tie-breaking the first
          // achiever wins; the max-id variant deliberately breaks the rule.
          st.dist = best;
          st.hops = static_cast<int>(in.msg.b) + 1;
          st.parent = in.from;
          if (tie == TieBreak::kMinId) break;
        }
        if (r <= h && st.dist.finite())
          for (auto [to, w] : g.out_arcs(v)) out.push_back({to, {kRelax, st.dist.value, st.hops}});
        if (r == h + 1 && st.parent != 0) out.push_back({st.parent, {kChild, 0, 0}});
      });

  HopTree tree;
  tree.root = root;
  tree.h = h;
  tree.dist.assign(n + 1, Distance::inf());
  tree.parent.assign(n + 1, 0);
  tree.hops.assign(n + 1, -1);
  tree.children.assign(n + 1, {});
  for (NodeId v = 1; v <= n; ++v) {
    tree.dist[v] = states[v].dist;
    tree.parent[v] = states[v].parent;
    tree.hops[v] = states[v].hops;
    tree.children[v] = std::move(states[v].children);
    std::sort(tree.children[v].begin(), tree.children[v].end());
  }
  return {std::move(tree), std::move(report)};
}

std::pair<std::vector<Distance>, RoundReport> full_sssp(const WeightedDigraph& g, NodeId root) {
  const int n = g.n();
  std::vector<Distance> init(n + 1, Distance::inf());
  init[root] = Distance::zero();

  auto [states, report] = run_phase(
      g, "full-sssp[" + std::to_string(root) + "]", std::move(init), n,
      [&](NodeId v, Distance& dist, std::int64_t r, std::span<const Incoming> inbox,
          std::vector<Outgoing>& out) {
        for (const Incoming& in : inbox)
          dist = std::min(dist, Distance::of(in.msg.a) + g.arc_weight(in.from, v));
        if (r <= n && dist.finite())
          for (auto [to, w] : g.out_arcs(v)) out.push_back({to, {kRelax, dist.value, 0}});
      });
  return {std::move(states), std::move(report)};
}

std::pair<BfsTree, RoundReport> bfs_tree(const WeightedDigraph& g, NodeId root,
                                         bool with_children) {
  const int n = g.n();
  struct BfsState {
    int depth = -1;
    NodeId parent = 0;
    std::int64_t adopt_round = 0;
    bool token_sent = false;
    std::vector<NodeId> children;
  };
  std::vector<BfsState> init(n + 1);
  init[root].depth = 0;

  const std::int64_t budget = with_children ? n + 1 : n;
  auto [states, report] = run_phase(
      g, "bfs[" + std::to_string(root) + "]", std::move(init), budget,
      [&](NodeId v, BfsState& st, std::int64_t r, std::span<const Incoming> inbox,
          std::vector<Outgoing>& out) {
        for (const Incoming& in : inbox) {
          if (in.msg.tag == kChild) {
            st.children.push_back(in.from);
          } else if (st.depth < 0) {
            // First receipt; the inbox is sorted, so the min-id sender at
            // depth-1 becomes the parent.
            st.depth = static_cast<int>(in.msg.a) + 1;
            st.parent = in.from;
            st.adopt_round = r;
          }
        }
        if (r > budget) return;
        if (st.depth >= 0 && !st.token_sent) {
          st.token_sent = true;
          for (NodeId u : g.neighbors(v)) out.push_back({u, {kToken, st.depth, 0}});
        } else if (with_children && st.parent != 0 && r == st.adopt_round + 1) {
          out.push_back({st.parent, {kChild, 0, 0}});
        }
      });

  BfsTree tree;
  tree.root = root;
  tree.parent.assign(n + 1, 0);
  tree.depth.assign(n + 1, -1);
  tree.children.assign(n + 1, {});
  for (NodeId v = 1; v <= n; ++v) {
    tree.parent[v] = states[v].parent;
    tree.depth[v] = states[v].depth;
    tree.children[v] = std::move(states[v].children);
    std::sort(tree.children[v].begin(), tree.children[v].end());
  }
  return {std::move(tree), std::move(report)};
}

std::pair<std::vector<std::vector<std::int64_t>>, RoundReport> pipelined_broadcast(
    const WeightedDigraph& g, NodeId root, const std::vector<std::int64_t>& values,
    std::string_view phase) {
  const int n = g.n();
  const std::int64_t k = static_cast<std::int64_t>(values.size());
  std::string name(phase);

  auto [tree, bfs_report] = bfs_tree(g, root, /*with_children=*/true);

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(values.size());
  for (std::int64_t i = 0; i < k; ++i) pairs.push_back({i + 1, values[i]});
  auto [received, pipe_report] = pipeline_down(g, tree, pairs, name + ":pipe", n + k - 1);

  std::vector<std::vector<std::int64_t>> result(n + 1);
  for (NodeId v = 1; v <= n; ++v) {
    result[v].reserve(received[v].size());
    for (auto [idx, val] : received[v]) result[v].push_back(val);
  }
  std::array reports{bfs_report, pipe_report};
  return {std::move(result), compose_reports(reports, std::move(name))};
}

std::pair<std::vector<std::vector<std::int64_t>>, RoundReport> all_to_all_broadcast(
    const WeightedDigraph& g, const std::vector<std::int64_t>& values, std::string_view phase) {
  const int n = g.n();
  if (static_cast<int>(values.size()) != n + 1)
    throw std::invalid_argument("all_to_all_broadcast: values must be indexed 1..n");
  const NodeId leader = 1;
  std::string name(phase);

  auto [tree, bfs_report] = bfs_tree(g, leader, /*with_children=*/true);

  struct ConvState {
    std::vector<std::pair<std::int64_t, std::int64_t>> queue;  // (origin, value)
    std::size_t head = 0;
    std::vector<std::int64_t> collected;  // leader only, indexed by origin
    int collected_count = 0;
  };
  std::vector<ConvState> init(n + 1);
  for (NodeId v = 1; v <= n; ++v) {
    if (v == leader) {
      init[v].collected.assign(n + 1, 0);
      init[v].collected[v] = values[v];
      init[v].collected_count = 1;
    } else {
      init[v].queue.push_back({v, values[v]});
    }
  }
  auto [conv_states, conv_report] = run_phase(
      g, name + ":convergecast", std::move(init), 2 * n,
      [&](NodeId v, ConvState& st, std::int64_t r, std::span<const Incoming> inbox,
          std::vector<Outgoing>& out) {
        for (const Incoming& in : inbox) {
          if (v == leader) {
            st.collected[in.msg.a] = in.msg.b;
            ++st.collected_count;
          } else {
            st.queue.push_back({in.msg.a, in.msg.b});
          }
        }
        if (r > 2 * n) return;
        if (v != leader && st.head < st.queue.size()) {
          auto [origin, value] = st.queue[st.head++];
          out.push_back({tree.parent[v], {kConv, origin, value}});
        }
      });
  if (conv_states[leader].collected_count != n)
    throw std::logic_error("all_to_all_broadcast: convergecast incomplete within budget");

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(n);
  for (NodeId u = 1; u <= n; ++u) pairs.push_back({u, conv_states[leader].collected[u]});
  auto [received, down_report] = pipeline_down(g, tree, pairs, name + ":down", 2 * n - 1);

  std::vector<std::vector<std::int64_t>> result(n + 1);
  for (NodeId v = 1; v <= n; ++v) {
    result[v].assign(n + 1, 0);
    if (static_cast<int>(received[v].size()) != n)
      throw std::logic_error("all_to_all_broadcast: node missed values");
    for (auto [origin, value] : received[v]) result[v][origin] = value;
  }
  std::array reports{bfs_report, conv_report, down_report};
  return {std::move(result), compose_reports(reports, std::move(name))};
}

}  // namespace congest
