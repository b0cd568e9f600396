#include "congest/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace congest {

namespace {

bool underlying_connected(int n, const std::vector<std::vector<NodeId>>& nbrs) {
  if (n <= 0) return false;
  std::vector<char> seen(n + 1, 0);
  std::vector<NodeId> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : nbrs[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

}  // namespace

WeightedDigraph WeightedDigraph::from_edges(int n, bool directed, std::vector<Edge> edges,
                                            std::int64_t wmax) {
  if (n < 1) throw GraphError("node count must be >= 1");
  WeightedDigraph g;
  g.n_ = n;
  g.directed_ = directed;
  g.wmax_ = wmax > 0 ? wmax : static_cast<std::int64_t>(n) * n;
  g.nbrs_.assign(n + 1, {});
  g.out_.assign(n + 1, {});
  g.in_.assign(n + 1, {});

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
    if (e.w <= 0)
      throw GraphError("non-positive weight on edge " + std::to_string(e.u) + "->" +
                       std::to_string(e.v));
    if (wmax > 0 && e.w > wmax)
      throw GraphError("weight " + std::to_string(e.w) + " exceeds W_max " +
                       std::to_string(wmax));
    g.wmax_ = std::max(g.wmax_, e.w);
    std::pair<NodeId, NodeId> key =
        directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second)
      throw GraphError("duplicate edge " + std::to_string(e.u) + "->" + std::to_string(e.v));

    g.out_[e.u].push_back({e.v, e.w});
    g.in_[e.v].push_back({e.u, e.w});
    if (!directed) {
      g.out_[e.v].push_back({e.u, e.w});
      g.in_[e.u].push_back({e.v, e.w});
    }
    g.nbrs_[e.u].push_back(e.v);
    g.nbrs_[e.v].push_back(e.u);
  }
  g.edges_ = std::move(edges);

  for (int v = 1; v <= n; ++v) {
    auto& nb = g.nbrs_[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    auto by_node = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(g.out_[v].begin(), g.out_[v].end(), by_node);
    std::sort(g.in_[v].begin(), g.in_[v].end(), by_node);
  }

  if (!underlying_connected(n, g.nbrs_))
    throw GraphError("underlying undirected graph is disconnected");
  return g;
}

bool WeightedDigraph::adjacent(NodeId u, NodeId v) const {
  const auto& nb = nbrs_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Weight WeightedDigraph::arc_weight(NodeId u, NodeId v) const {
  const auto& arcs = in_[v];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), u,
                             [](const auto& a, NodeId x) { return a.first < x; });
  if (it == arcs.end() || it->first != u)
    throw GraphError("no arc " + std::to_string(u) + "->" + std::to_string(v));
  return it->second;
}

WeightedDigraph parse_graph(std::istream& in, std::int64_t wmax) {
  std::string header;
  if (!std::getline(in, header)) throw GraphError("empty input");
  std::istringstream hs(header);
  int n = 0, m = 0;
  std::string kind;
  if (!(hs >> n >> m >> kind) || (kind != "directed" && kind != "undirected"))
    throw GraphError("malformed header: expected 'n m directed|undirected'");
  std::string trailing;
  if (hs >> trailing) throw GraphError("malformed header: trailing tokens");
  if (m < 0) throw GraphError("negative edge count");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::string line;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw GraphError("expected " + std::to_string(m) + " edge lines");
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.u >> e.v >> e.w)) throw GraphError("malformed edge line: '" + line + "'");
    if (ls >> trailing) throw GraphError("malformed edge line: trailing tokens");
    edges.push_back(e);
  }
  return WeightedDigraph::from_edges(n, kind == "directed", std::move(edges), wmax);
}

WeightedDigraph parse_graph(const std::string& text, std::int64_t wmax) {
  std::istringstream in(text);
  return parse_graph(in, wmax);
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

namespace {

// Platform-stable draws: std::uniform_*_distribution is implementation
// defined, so the generator sticks to raw mt19937_64 output.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t weight_draw(std::mt19937_64& rng, std::int64_t wmax) {
  return 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(wmax));
}

}  // namespace

WeightedDigraph generate_gnp(int n, double p, std::int64_t wmax, std::uint64_t seed,
                             bool directed) {
  if (n < 2) throw GraphError("generate_gnp requires n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw GraphError("generate_gnp requires 0 < p <= 1");
  if (wmax < 1) throw GraphError("generate_gnp requires wmax >= 1");

  constexpr int kMaxAttempts = 64;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (NodeId u = 1; u <= n; ++u) {
      for (NodeId v = directed ? 1 : u + 1; v <= n; ++v) {
        if (u == v) continue;
        if (unit_draw(rng) < p) edges.push_back({u, v, weight_draw(rng, wmax)});
      }
    }
    try {
      return WeightedDigraph::from_edges(n, directed, std::move(edges), wmax);
    } catch (const GraphError&) {
      // disconnected draw; continue the seeded stream
    }
  }
  throw GraphError("generate_gnp: disconnected after " + std::to_string(kMaxAttempts) +
                   " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                   ", seed=" + std::to_string(seed) + ")");
}

}  // namespace congest
