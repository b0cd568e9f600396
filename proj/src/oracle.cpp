#include "congest/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace congest {
namespace oracle {

namespace {

// Root-to-v vertex path along parent pointers, root first. Throws on a
// broken chain (cycle or detached parent), which no valid tree produces.
std::vector<NodeId> tree_path(const HopTree& tree, NodeId v) {
  std::vector<NodeId> rev{v};
  NodeId cur = v;
  while (cur != tree.root) {
    cur = tree.parent[cur];
    if (cur == 0 || static_cast<int>(rev.size()) > static_cast<int>(tree.parent.size()))
      throw std::logic_error("broken parent chain in tree rooted at " +
                             std::to_string(tree.root));
    rev.push_back(cur);
  }
  return {rev.rbegin(), rev.rend()};
}

bool contains_blocker(const std::vector<NodeId>& path, std::span<const NodeId> q) {
  for (NodeId v : path)
    if (std::find(q.begin(), q.end(), v) != q.end()) return true;
  return false;
}

// Full hop-bounded DP table: d[k][v] = min weight over paths with exactly
// <= k edges from root.
std::vector<std::vector<Distance>> hop_table(const WeightedDigraph& g, NodeId root, int h) {
  const int n = g.n();
  std::vector<std::vector<Distance>> d(h + 1, std::vector<Distance>(n + 1, Distance::inf()));
  d[0][root] = Distance::zero();
  for (int k = 1; k <= h; ++k) {
    d[k] = d[k - 1];
    for (NodeId v = 1; v <= n; ++v)
      for (auto [u, w] : g.in_arcs(v)) d[k][v] = std::min(d[k][v], d[k - 1][u] + w);
  }
  return d;
}

}  // namespace

DistanceMatrix oracle_apsp(const WeightedDigraph& g) {
  const int n = g.n();
  DistanceMatrix m = DistanceMatrix::make(n);
  for (NodeId u = 1; u <= n; ++u)
    for (NodeId v = 1; v <= n; ++v) m.at(u, v) = (u == v) ? Distance::zero() : Distance::inf();
  for (const Edge& e : g.edges()) {
    m.at(e.u, e.v) = std::min(m.at(e.u, e.v), Distance::of(e.w));
    if (!g.directed()) m.at(e.v, e.u) = std::min(m.at(e.v, e.u), Distance::of(e.w));
  }
  for (NodeId k = 1; k <= n; ++k)
    for (NodeId u = 1; u <= n; ++u) {
      if (!m.at(u, k).finite()) continue;
      for (NodeId v = 1; v <= n; ++v)
        m.at(u, v) = std::min(m.at(u, v), m.at(u, k) + m.at(k, v));
    }
  return m;
}

std::vector<Distance> oracle_hhop(const WeightedDigraph& g, NodeId root, int h) {
  return hop_table(g, root, h).back();
}

std::vector<std::vector<std::int64_t>> oracle_scores(std::span<const HopTree> trees,
                                                     std::span<const NodeId> q, int h) {
  std::vector<std::vector<std::int64_t>> score(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const HopTree& tree = trees[t];
    const int n = static_cast<int>(tree.hops.size()) - 1;
    score[t].assign(n + 1, 0);
    for (NodeId leaf = 1; leaf <= n; ++leaf) {
      if (tree.hops[leaf] != h) continue;
      std::vector<NodeId> path = tree_path(tree, leaf);
      if (contains_blocker(path, q)) continue;
      for (NodeId v : path) ++score[t][v];
    }
  }
  return score;
}

std::int64_t count_paths(std::span<const HopTree> trees, std::span<const NodeId> q, int h) {
  std::int64_t count = 0;
  for (const HopTree& tree : trees) {
    const int n = static_cast<int>(tree.hops.size()) - 1;
    for (NodeId leaf = 1; leaf <= n; ++leaf) {
      if (tree.hops[leaf] != h) continue;
      if (!contains_blocker(tree_path(tree, leaf), q)) ++count;
    }
  }
  return count;
}

CoverageResult oracle_blocker_check(std::span<const HopTree> trees, std::span<const NodeId> q,
                                    int h) {
  for (const HopTree& tree : trees) {
    const int n = static_cast<int>(tree.hops.size()) - 1;
    for (NodeId leaf = 1; leaf <= n; ++leaf) {
      if (tree.hops[leaf] != h) continue;
      std::vector<NodeId> path = tree_path(tree, leaf);
      if (!contains_blocker(path, q))
        return {false, tree.root, std::move(path)};
    }
  }
  return {};
}

IntreeResult intree_check(std::span<const HopTree> trees, NodeId c) {
  std::map<NodeId, NodeId> out_edge;  // vertex -> next hop toward c
  for (const HopTree& tree : trees) {
    if (tree.root == c || !tree.reached(c)) continue;
    NodeId prev = c;
    for (NodeId cur = tree.parent[c]; prev != tree.root; cur = tree.parent[cur]) {
      auto [it, inserted] = out_edge.insert({cur, prev});
      if (!inserted && it->second != prev) return {false, cur};
      prev = cur;
      if (cur == tree.root) break;
    }
  }
  return {};
}

TreeCheckResult check_hop_tree(const WeightedDigraph& g, const HopTree& tree) {
  const int n = g.n();
  auto fail = [&](const std::string& detail) { return TreeCheckResult{false, detail}; };

  if (tree.dist[tree.root] != Distance::zero() || tree.hops[tree.root] != 0 ||
      tree.parent[tree.root] != 0)
    return fail("root state");

  auto table = hop_table(g, tree.root, tree.h);
  const auto& exact = table.back();
  for (NodeId v = 1; v <= n; ++v)
    if (tree.dist[v] != exact[v])
      return fail("dist mismatch at node " + std::to_string(v));

  // Sequential mirror of the synchronous relaxation: each round every node
  // re-adopts the min-id achiever of its best distance so far. A stored
  // parent's own label may legitimately disagree with the child's (the
  // parent can keep improving along paths the child's hop budget excludes),
  // so the tree is compared against this construction rather than against
  // per-edge arithmetic.
  struct Label {
    Distance dist;
    NodeId parent = 0;
    int hops = -1;
  };
  std::vector<Label> prev(n + 1), cur(n + 1);
  prev[tree.root] = {Distance::zero(), 0, 0};
  for (int r = 1; r <= tree.h; ++r) {
    cur = prev;
    for (NodeId v = 1; v <= n; ++v) {
      Distance best = prev[v].dist;
      for (auto [u, w] : g.in_arcs(v)) {
        if (prev[u].hops < 0 || prev[u].hops + 1 > tree.h) continue;
        best = std::min(best, prev[u].dist + w);
      }
      for (auto [u, w] : g.in_arcs(v)) {
        if (prev[u].hops < 0 || prev[u].hops + 1 > tree.h) continue;
        if (prev[u].dist + w != best) continue;
        cur[v] = {best, u, prev[u].hops + 1};
        break;
      }
    }
    std::swap(prev, cur);
  }
  for (NodeId v = 1; v <= n; ++v) {
    if (v == tree.root) continue;
    if (tree.reached(v) != tree.dist[v].finite()) return fail("hops/dist disagreement");
    if (tree.parent[v] != prev[v].parent)
      return fail("parent mismatch at node " + std::to_string(v));
    if (tree.hops[v] != prev[v].hops) return fail("hop label mismatch at node " + std::to_string(v));
    if (tree.reached(v) && (tree.hops[v] < 1 || tree.hops[v] > tree.h)) return fail("hop range");
  }

  std::vector<std::vector<NodeId>> expect_children(n + 1);
  for (NodeId v = 1; v <= n; ++v)
    if (tree.parent[v] != 0) expect_children[tree.parent[v]].push_back(v);
  for (NodeId v = 1; v <= n; ++v)
    if (tree.children[v] != expect_children[v]) return fail("children not inverse of parents");

  return {};
}

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.pass; });
}

std::string OracleReport::text() const {
  std::ostringstream out;
  for (const OracleCheck& c : checks) {
    out << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.pass && !c.witness.empty()) out << " (" << c.witness << ")";
    out << '\n';
  }
  return out.str();
}

std::string OracleReport::json() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) out << ", ";
    out << "{\"check\": \"" << checks[i].name << "\", \"pass\": "
        << (checks[i].pass ? "true" : "false") << ", \"witness\": \"" << checks[i].witness
        << "\"}";
  }
  out << "]";
  return out.str();
}

OracleReport verify_run(const WeightedDigraph& g, const ApspResult& result) {
  OracleReport report;
  const int n = g.n();
  const int h = result.h;

  {
    OracleCheck check{"apsp-exact"};
    DistanceMatrix truth = oracle_apsp(g);
    for (NodeId u = 1; u <= n && check.pass; ++u)
      for (NodeId v = 1; v <= n; ++v)
        if (result.dist.at(u, v) != truth.at(u, v)) {
          check.pass = false;
          check.witness = "pair (" + std::to_string(u) + "," + std::to_string(v) + "): got " +
                          to_string(result.dist.at(u, v)) + ", want " + to_string(truth.at(u, v));
          break;
        }
    report.checks.push_back(std::move(check));
  }
  {
    OracleCheck check{"tree-structure"};
    for (const HopTree& tree : result.trees) {
      TreeCheckResult r = check_hop_tree(g, tree);
      if (!r.ok) {
        check.pass = false;
        check.witness = "tree " + std::to_string(tree.root) + ": " + r.detail;
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    OracleCheck check{"blocker-coverage"};
    CoverageResult r = oracle_blocker_check(result.trees, result.blockers.q, h);
    if (!r.ok) {
      check.pass = false;
      std::ostringstream w;
      w << "uncovered path in tree " << r.tree_root << ":";
      for (NodeId v : r.witness_path) w << ' ' << v;
      check.witness = w.str();
    }
    report.checks.push_back(std::move(check));
  }
  {
    OracleCheck check{"blocker-size"};
    const std::int64_t p0 = count_paths(result.trees, {}, h);
    const double bound_raw =
        std::ceil(static_cast<double>(n) / h * std::log(static_cast<double>(std::max<std::int64_t>(p0, 2))));
    const std::int64_t bound = static_cast<std::int64_t>(bound_raw) + 1;
    if (static_cast<std::int64_t>(result.blockers.q.size()) > bound) {
      check.pass = false;
      check.witness = "|Q|=" + std::to_string(result.blockers.q.size()) + " exceeds bound " +
                      std::to_string(bound) + " (p0=" + std::to_string(p0) + ")";
    }
    report.checks.push_back(std::move(check));
  }
  {
    OracleCheck check{"intree"};
    for (NodeId c : result.blockers.q) {
      IntreeResult r = intree_check(result.trees, c);
      if (!r.ok) {
        check.pass = false;
        check.witness =
            "vertex " + std::to_string(r.vertex) + " has two outgoing edges toward " +
            std::to_string(c);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    OracleCheck check{"bandwidth"};
    for (const RoundReport& r : result.all_reports())
      if (r.max_load > 1) {
        check.pass = false;
        check.witness = "phase " + r.phase;
        break;
      }
    report.checks.push_back(std::move(check));
  }
  {
    OracleCheck check{"round-budget"};
    const std::int64_t q = static_cast<std::int64_t>(result.blockers.q.size());
    const std::int64_t budget = static_cast<std::int64_t>(n) * (h + 1) +
                                2 * static_cast<std::int64_t>(n) * h + 5 * n +
                                q * (10 * static_cast<std::int64_t>(n) + h - 1);
    const std::int64_t measured = result.total().rounds;
    if (measured > budget) {
      check.pass = false;
      check.witness = "measured " + std::to_string(measured) + " > budget " +
                      std::to_string(budget);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace oracle
}  // namespace congest
