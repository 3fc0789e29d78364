#include <catch2/catch_amalgamated.hpp>

#include "mdim/graph.hpp"
#include "mdim/reference.hpp"
#include "mdim/rng.hpp"

#include <algorithm>
#include <set>

using namespace mdim;

TEST_CASE("build_graph deduplicates and validates") {
  Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE_FALSE(g.has_edge(0, 2));

  REQUIRE_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(build_graph(2, {{-1, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(build_graph(0, {}), std::invalid_argument);
}

TEST_CASE("neighbors are sorted and degrees match") {
  Graph g = build_graph(4, {{2, 0}, {2, 3}, {2, 1}});
  const auto& nb = g.neighbors(2);
  REQUIRE(nb == std::vector<int>{0, 1, 3});
  REQUIRE(g.degree(2) == 3);
  REQUIRE(g.degree(0) == 1);
  REQUIRE(g.max_degree() == 3);
  REQUIRE(g.min_degree() == 1);
}

TEST_CASE("edges list is normalized and sorted") {
  Graph g = build_graph(4, {{3, 1}, {2, 0}, {1, 0}});
  auto es = g.edges();
  REQUIRE(es.size() == 3);
  REQUIRE(es[0].u == 0);
  REQUIRE(es[0].v == 1);
  REQUIRE(es[1].u == 0);
  REQUIRE(es[1].v == 2);
  REQUIRE(es[2].u == 1);
  REQUIRE(es[2].v == 3);
}

TEST_CASE("path distances match the row layout") {
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  DistanceTable dt = all_pairs_distances(p4);
  const std::uint16_t* row = dt.row(0);
  REQUIRE(std::vector<int>(row, row + 4) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(dt.distance(3, 0) == 3);
  REQUIRE(dt.diameter() == 3);
  REQUIRE(p4.is_connected());
}

TEST_CASE("bfs distances agree with floyd-warshall on random graphs") {
  std::mt19937_64 rng = make_rng(derive_seed(99, "graph/bfs"));
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(bounded_rand(rng, 8));
    Graph g = reference::random_connected_graph(n, 0.3, rng);
    DistanceTable dt = all_pairs_distances(g);
    auto fw = reference::floyd_warshall(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        REQUIRE(dt.distance(u, v) == fw[u][v]);
  }
}

TEST_CASE("disconnected graphs use the unreachable sentinel") {
  Graph g = build_graph(4, {{0, 1}, {2, 3}});
  REQUIRE_FALSE(g.is_connected());
  DistanceTable dt = all_pairs_distances(g);
  REQUIRE(dt.distance(0, 2) == DistanceTable::kUnreachable);
  REQUIRE(dt.distance(0, 1) == 1);
}

TEST_CASE("edge distance is the min endpoint distance") {
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  DistanceTable dt = all_pairs_distances(p4);
  REQUIRE(edge_distance(dt, Edge{1, 2}, 0) == 1);
  REQUIRE(edge_distance(dt, Edge{1, 2}, 3) == 1);
  REQUIRE(edge_distance(dt, Edge{0, 1}, 0) == 0);
  REQUIRE(edge_distance(dt, Edge{2, 3}, 0) == 2);
}

TEST_CASE("distance vectors list landmarks in order") {
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  DistanceTable dt = all_pairs_distances(p4);
  REQUIRE(distance_vector(dt, 2, {0, 3}) == std::vector<int>{2, 1});
  REQUIRE(distance_vector(dt, 2, {3, 0}) == std::vector<int>{1, 2});
}

TEST_CASE("edge distance vectors collide on a star") {
  // both leaf edges of K_{1,3} sit at distance 1 from the remaining leaf
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  DistanceTable dt = all_pairs_distances(star);
  REQUIRE(edge_distance_vector(dt, Edge{0, 1}, {3}) ==
          edge_distance_vector(dt, Edge{0, 2}, {3}));
  REQUIRE(edge_distance_vector(dt, Edge{0, 1}, {1, 3}) ==
          std::vector<int>{0, 1});
}

TEST_CASE("labels round-trip and validate") {
  Graph g = build_graph(2, {{0, 1}});
  g.set_labels({{0, 0}, {0, 1}});
  REQUIRE(g.has_labels());
  REQUIRE(g.label_dimension() == 2);
  REQUIRE(g.label(1) == LatticePoint{0, 1});
  REQUIRE(g.label_index().at(LatticePoint{0, 1}) == 1);

  REQUIRE_THROWS_AS(g.set_labels({{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(g.set_labels({{0, 0}, {1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(g.set_labels({{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("linf distance and point printing") {
  REQUIRE(linf_distance({0, 3}, {2, 2}) == 2);
  REQUIRE(linf_distance({1, 1, 1}, {1, 1, 1}) == 0);
  REQUIRE(point_to_string({1, 0, 2}) == "(1,0,2)");
}

TEST_CASE("add_edge extends an existing graph") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 1);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.is_connected());
  std::set<int> nb(g.neighbors(1).begin(), g.neighbors(1).end());
  REQUIRE(nb == std::set<int>{0, 2});
}
