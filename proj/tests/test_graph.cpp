#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>

#include "congest/graph.hpp"
#include "doctest.h"

using namespace congest;

namespace {
const char* kGraphA = "3 3 directed\n1 2 1\n2 3 1\n1 3 10\n";
}

TEST_CASE("parse directed edge list") {
  WeightedDigraph g = parse_graph(kGraphA);
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.directed());
  CHECK(g.edges()[0] == Edge{1, 2, 1});
  CHECK(g.edges()[2] == Edge{1, 3, 10});
}

TEST_CASE("underlying undirected adjacency") {
  WeightedDigraph g = parse_graph(kGraphA);
  CHECK(g.neighbors(3) == std::vector<NodeId>{1, 2});
  CHECK(g.adjacent(3, 1));
  CHECK(g.adjacent(1, 3));

  WeightedDigraph path = parse_graph("3 2 undirected\n1 2 4\n2 3 9\n");
  CHECK(path.neighbors(2) == std::vector<NodeId>{1, 3});
  CHECK_FALSE(path.adjacent(1, 3));

  WeightedDigraph k3 = parse_graph("3 6 directed\n1 2 1\n2 1 1\n1 3 1\n3 1 1\n2 3 1\n3 2 1\n");
  for (NodeId v = 1; v <= 3; ++v) CHECK(k3.neighbors(v).size() == 2);
}

TEST_CASE("adjacency is symmetric") {
  WeightedDigraph g = generate_gnp(20, 0.3, 50, 11, /*directed=*/true);
  for (NodeId u = 1; u <= g.n(); ++u)
    for (NodeId v : g.neighbors(u)) CHECK(g.adjacent(v, u));
}

TEST_CASE("weighted arcs for undirected graphs go both ways") {
  WeightedDigraph g = parse_graph("2 1 undirected\n1 2 5\n");
  CHECK(g.arc_weight(1, 2) == 5);
  CHECK(g.arc_weight(2, 1) == 5);
  CHECK(g.out_arcs(2).size() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_graph("2 1 undirected\n1 2 0\n"), GraphError);          // weight 0
  CHECK_THROWS_AS(parse_graph("4 1 directed\n1 2 5\n"), GraphError);            // disconnected
  CHECK_THROWS_AS(parse_graph("2 1 undirected\n1 1 3\n"), GraphError);          // self-loop
  CHECK_THROWS_AS(parse_graph("2 2 undirected\n1 2 3\n2 1 3\n"), GraphError);   // duplicate
  CHECK_THROWS_AS(parse_graph("2 1 undirected\n1 3 3\n"), GraphError);          // out of range
  CHECK_THROWS_AS(parse_graph("2 1 sideways\n1 2 3\n"), GraphError);            // bad header
  CHECK_THROWS_AS(parse_graph("2 1 undirected\n1 2 3 7\n"), GraphError);        // trailing token
  CHECK_THROWS_AS(parse_graph("2 2 undirected\n1 2 3\n"), GraphError);          // missing line
  CHECK_THROWS_AS(parse_graph("2 1 undirected\n1 2 9\n", /*wmax=*/5), GraphError);
}

TEST_CASE("serialize round-trips bit-exactly") {
  CHECK(serialize_graph(parse_graph(kGraphA)) == kGraphA);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    WeightedDigraph g = generate_gnp(12, 0.4, 30, seed, seed % 2 == 0);
    WeightedDigraph back = parse_graph(serialize_graph(g));
    CHECK(back.n() == g.n());
    CHECK(back.directed() == g.directed());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("gnp p=1 yields the complete graph") {
  WeightedDigraph g = generate_gnp(5, 1.0, 1, 7, /*directed=*/false);
  CHECK(g.n() == 5);
  CHECK(g.m() == 10);
  for (const Edge& e : g.edges()) CHECK(e.w == 1);
  CHECK(serialize_graph(g).substr(0, 15) == "5 10 undirected");

  WeightedDigraph d = generate_gnp(4, 1.0, 3, 9, /*directed=*/true);
  CHECK(d.m() == 12);
}

TEST_CASE("gnp is seed-deterministic") {
  auto a = serialize_graph(generate_gnp(10, 0.5, 20, 42, true));
  auto b = serialize_graph(generate_gnp(10, 0.5, 20, 42, true));
  CHECK(a == b);
  auto c = serialize_graph(generate_gnp(10, 0.5, 20, 43, true));
  CHECK(a != c);
}

TEST_CASE("gnp reports the failing seed on disconnection") {
  try {
    generate_gnp(4, 0.0001, 9, 1, /*directed=*/false);
    FAIL("expected disconnection error");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("seed=1") != std::string::npos);
  }
}

TEST_CASE("gnp weights stay within bounds") {
  WeightedDigraph g = generate_gnp(14, 0.6, 7, 5, /*directed=*/true);
  for (const Edge& e : g.edges()) {
    CHECK(e.w >= 1);
    CHECK(e.w <= 7);
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : g.edges()) CHECK(seen.insert({e.u, e.v}).second);
}

TEST_CASE("distance saturates at infinity") {
  CHECK(Distance::inf() + 5 == Distance::inf());
  CHECK(Distance::of(3) + Distance::of(4) == Distance::of(7));
  CHECK(Distance::of(3) + Distance::inf() == Distance::inf());
  CHECK(Distance::of(3) < Distance::inf());
  CHECK(to_string(Distance::inf()) == "INF");
  CHECK(to_string(Distance::of(12)) == "12");
}
