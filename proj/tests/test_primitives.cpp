#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "congest/oracle.hpp"
#include "congest/primitives.hpp"
#include "doctest.h"

using namespace congest;

namespace {

WeightedDigraph graph_a() { return parse_graph("3 3 directed\n1 2 1\n2 3 1\n1 3 10\n"); }

}  // namespace

TEST_CASE("h-hop tree on a 3-node directed triangle") {
  WeightedDigraph g = graph_a();

  SUBCASE("h=1 sees only direct edges") {
    auto [tree, report] = hhop_sssp(g, 1, 1);
    CHECK(tree.dist[1] == Distance::zero());
    CHECK(tree.dist[2] == Distance::of(1));
    CHECK(tree.dist[3] == Distance::of(10));
    CHECK(tree.parent[3] == 1);
    CHECK(tree.hops[3] == 1);
    CHECK(tree.children[1] == std::vector<NodeId>{2, 3});
    CHECK(report.rounds == 2);  // h relaxations + child notification
  }
  SUBCASE("h=2 finds the cheaper 2-hop path") {
    auto [tree, report] = hhop_sssp(g, 1, 2);
    CHECK(tree.dist[3] == Distance::of(2));
    CHECK(tree.parent[3] == 2);
    CHECK(tree.hops[3] == 2);
    CHECK(tree.children[2] == std::vector<NodeId>{3});
    CHECK(report.rounds == 3);
  }
}

TEST_CASE("full SSSP") {
  WeightedDigraph g = graph_a();
  auto [dist1, report] = full_sssp(g, 1);
  CHECK(dist1[1] == Distance::zero());
  CHECK(dist1[2] == Distance::of(1));
  CHECK(dist1[3] == Distance::of(2));
  CHECK(report.rounds == 3);  // exactly n

  auto [dist3, r3] = full_sssp(g, 3);
  CHECK(dist3[1] == Distance::inf());
  CHECK(dist3[2] == Distance::inf());
}

TEST_CASE("h-hop distances match the dynamic program") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    WeightedDigraph g = generate_gnp(20, 0.25, 40, seed, seed % 2 == 0);
    for (int h : {1, 3, 7, 19}) {
      for (NodeId root = 1; root <= g.n(); ++root) {
        auto [tree, report] = hhop_sssp(g, root, h);
        CHECK(tree.dist == oracle::oracle_hhop(g, root, h));
        CHECK(report.rounds == h + 1);
      }
    }
  }
}

TEST_CASE("tree structure matches the sequential construction") {
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    WeightedDigraph g = generate_gnp(16, 0.3, 10, seed, seed % 2 == 0);
    for (int h : {2, 5, 15}) {
      for (NodeId root = 1; root <= g.n(); ++root) {
        auto [tree, report] = hhop_sssp(g, root, h);
        auto check = oracle::check_hop_tree(g, tree);
        INFO("seed ", seed, " h ", h, " root ", root, ": ", check.detail);
        CHECK(check.ok);
      }
    }
  }
}

TEST_CASE("monotonicity in the hop bound") {
  WeightedDigraph g = generate_gnp(18, 0.2, 25, 9, /*directed=*/true);
  for (NodeId root : {1, 5, 18}) {
    auto [t2, r2] = hhop_sssp(g, root, 2);
    auto [t6, r6] = hhop_sssp(g, root, 6);
    auto [tn, rn] = hhop_sssp(g, root, g.n() - 1);
    auto [full, rf] = full_sssp(g, root);
    for (NodeId v = 1; v <= g.n(); ++v) {
      CHECK(t6.dist[v] <= t2.dist[v]);
      CHECK(tn.dist[v] <= t6.dist[v]);
      CHECK(tn.dist[v] == full[v]);
    }
  }
}

TEST_CASE("tie-break is independent of edge input order") {
  WeightedDigraph g = generate_gnp(14, 0.5, 3, 21, /*directed=*/false);
  std::vector<Edge> edges = g.edges();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(edges.begin(), edges.end(), rng);
    WeightedDigraph h = WeightedDigraph::from_edges(g.n(), g.directed(), edges);
    for (NodeId root : {1, 7}) {
      auto [ta, ra] = hhop_sssp(g, root, 4);
      auto [tb, rb] = hhop_sssp(h, root, 4);
      CHECK(ta.parent == tb.parent);
      CHECK(ta.dist == tb.dist);
    }
  }
}

TEST_CASE("bfs tree shapes") {
  WeightedDigraph path = parse_graph("3 2 undirected\n1 2 5\n2 3 7\n");
  auto [t1, r1] = bfs_tree(path, 1);
  CHECK(t1.depth[3] == 2);
  CHECK(t1.parent[3] == 2);
  CHECK(r1.rounds == 3);  // n rounds without child notification

  WeightedDigraph k4 = generate_gnp(4, 1.0, 6, 3, /*directed=*/false);
  auto [t2, r2] = bfs_tree(k4, 2);
  for (NodeId v : {1, 3, 4}) CHECK(t2.depth[v] == 1);

  WeightedDigraph star = parse_graph("4 3 undirected\n1 2 1\n1 3 1\n1 4 1\n");
  auto [t3, r3] = bfs_tree(star, 3);
  CHECK(t3.depth[1] == 1);
  CHECK(t3.depth[2] == 2);
  CHECK(t3.depth[4] == 2);

  auto [t4, r4] = bfs_tree(star, 3, /*with_children=*/true);
  CHECK(t4.children[3] == std::vector<NodeId>{1});
  CHECK(t4.children[1] == std::vector<NodeId>{2, 4});
  CHECK(r4.rounds == 5);  // n + 1 with child notification
}

TEST_CASE("bfs parent is the min-id neighbor one level up") {
  for (std::uint64_t seed : {2u, 8u}) {
    WeightedDigraph g = generate_gnp(15, 0.3, 4, seed, /*directed=*/true);
    auto [tree, report] = bfs_tree(g, 1);
    for (NodeId v = 2; v <= g.n(); ++v) {
      REQUIRE(tree.depth[v] >= 1);
      NodeId best = 0;
      for (NodeId u : g.neighbors(v))
        if (tree.depth[u] == tree.depth[v] - 1) {
          best = u;
          break;  // neighbors sorted ascending
        }
      CHECK(tree.parent[v] == best);
    }
  }
}

TEST_CASE("pipelined broadcast delivers the root sequence everywhere") {
  WeightedDigraph path = parse_graph("3 2 undirected\n1 2 5\n2 3 7\n");
  auto [received, report] = pipelined_broadcast(path, 1, {7, 8, 9});
  for (NodeId v = 1; v <= 3; ++v) CHECK(received[v] == std::vector<std::int64_t>{7, 8, 9});
  CHECK(report.rounds == 2 * 3 + 3);  // 2n + k

  auto [nothing, r0] = pipelined_broadcast(path, 1, {});
  CHECK(r0.rounds == 2 * 3);
  for (NodeId v = 1; v <= 3; ++v) CHECK(nothing[v].empty());

  WeightedDigraph g = generate_gnp(22, 0.2, 9, 13, /*directed=*/true);
  std::vector<std::int64_t> values;
  for (int i = 0; i < 10; ++i) values.push_back(100 - i);
  auto [rec, rep] = pipelined_broadcast(g, 5, values);
  for (NodeId v = 1; v <= g.n(); ++v) CHECK(rec[v] == values);
  CHECK(rep.rounds == 2 * 22 + 10);
}

TEST_CASE("all-to-all broadcast") {
  WeightedDigraph path = parse_graph("3 2 undirected\n1 2 5\n2 3 7\n");
  auto [vecs, report] = all_to_all_broadcast(path, {0, 10, 20, 30});
  for (NodeId v = 1; v <= 3; ++v) CHECK(vecs[v] == std::vector<std::int64_t>{0, 10, 20, 30});
  CHECK(report.rounds == 5 * 3);

  WeightedDigraph pair = parse_graph("2 1 undirected\n1 2 1\n");
  auto [two, r2] = all_to_all_broadcast(pair, {0, -4, 9});
  CHECK(two[1] == std::vector<std::int64_t>{0, -4, 9});
  CHECK(two[2] == std::vector<std::int64_t>{0, -4, 9});

  WeightedDigraph g = generate_gnp(32, 0.15, 50, 6, /*directed=*/false);
  std::vector<std::int64_t> values(33);
  for (NodeId v = 1; v <= 32; ++v) values[v] = v * v + 1;
  auto [all, rep] = all_to_all_broadcast(g, values);
  for (NodeId v = 1; v <= 32; ++v) CHECK(all[v] == values);
  CHECK(rep.rounds == 5 * 32);
}
