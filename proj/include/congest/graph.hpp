#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congest/distance.hpp"

namespace congest {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Immutable edge-weighted graph (directed or undirected) plus the underlying
// undirected communication topology. Node ids are 1..n. Weights are integers
// in [1, W_max]; the underlying undirected graph must be connected.
class WeightedDigraph {
 public:
  // Validates and builds adjacency. wmax == 0 leaves the weight bound
  // unchecked; wmax() then reports max(n^2, largest weight present).
  static WeightedDigraph from_edges(int n, bool directed, std::vector<Edge> edges,
                                    std::int64_t wmax = 0);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  std::int64_t wmax() const { return wmax_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Undirected communication neighbors, sorted ascending.
  const std::vector<NodeId>& neighbors(NodeId v) const { return nbrs_[v]; }
  bool adjacent(NodeId u, NodeId v) const;

  // Weighted arcs. For undirected graphs each edge appears in both directions.
  const std::vector<std::pair<NodeId, Weight>>& out_arcs(NodeId v) const { return out_[v]; }
  const std::vector<std::pair<NodeId, Weight>>& in_arcs(NodeId v) const { return in_[v]; }

  // Weight of arc (u,v); throws if absent.
  Weight arc_weight(NodeId u, NodeId v) const;

 private:
  int n_ = 0;
  bool directed_ = true;
  std::int64_t wmax_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> nbrs_;
  std::vector<std::vector<std::pair<NodeId, Weight>>> out_;
  std::vector<std::vector<std::pair<NodeId, Weight>>> in_;
};

// Edge-list format: line 1 "n m directed|undirected", then m lines "u v w".
WeightedDigraph parse_graph(std::istream& in, std::int64_t wmax = 0);
WeightedDigraph parse_graph(const std::string& text, std::int64_t wmax = 0);

// Bit-exact round-trippable serialization of the same format.
std::string serialize_graph(const WeightedDigraph& g);

// Seeded G(n,p) with weights uniform in [1, wmax]. Fully determined by the
// seed; retries a bounded number of times if the underlying undirected graph
// comes out disconnected, then reports the failing seed.
WeightedDigraph generate_gnp(int n, double p, std::int64_t wmax, std::uint64_t seed,
                             bool directed);

}  // namespace congest
