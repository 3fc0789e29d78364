#include <catch2/catch_amalgamated.hpp>

#include "mdim/constructions.hpp"
#include "mdim/reference.hpp"
#include "mdim/solver.hpp"

#include <algorithm>
#include <set>

using namespace mdim;

TEST_CASE("dk window covers the box with lex labels") {
  Graph p4 = dk_window(1, {0}, {3});
  REQUIRE(p4.vertex_count() == 4);
  REQUIRE(p4.edge_count() == 3);
  REQUIRE(p4.label(0) == LatticePoint{0});
  REQUIRE(p4.label(3) == LatticePoint{3});

  Graph w2 = dk_window(2, {0, 0}, {2, 2});
  REQUIRE(w2.vertex_count() == 9);
  int center = w2.label_index().at({1, 1});
  REQUIRE(w2.degree(center) == 8);

  Graph w3 = dk_window(3, {0, 0, 0}, {2, 2, 2});
  REQUIRE(w3.degree(w3.label_index().at({1, 1, 1})) == 26);

  REQUIRE_THROWS_AS(dk_window(0, {}, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(dk_window(2, {0}, {1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(dk_window(1, {-1}, {1}), std::invalid_argument);
}

TEST_CASE("adjacency in the window is the chebyshev-distance-1 rule") {
  Graph w = dk_window(2, {0, 0}, {2, 2});
  const auto idx = w.label_index();
  for (const auto& [p, u] : idx)
    for (const auto& [r, v] : idx)
      if (u < v) REQUIRE(w.has_edge(u, v) == (linf_distance(p, r) == 1));
}

TEST_CASE("the smallest cross polytope is the pinned five-point graph") {
  CkGraph ck = ck_q(2, 1);
  REQUIRE(ck.g.vertex_count() == 5);
  std::vector<LatticePoint> expect = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
  REQUIRE(ck.g.labels() == expect);
  REQUIRE(ck.landmarks == std::vector<int>{0, 1});
}

TEST_CASE("cross polytope corners exist and resolve by coordinates") {
  for (int k = 2; k <= 3; ++k)
    for (int q = 1; q <= 3; ++q) {
      CkGraph ck = ck_q(k, q);
      REQUIRE(static_cast<int>(ck.landmarks.size()) == k);
      DistanceTable dt = all_pairs_distances(ck.g);
      for (int v = 0; v < ck.g.vertex_count(); ++v) {
        INFO("k " << k << " q " << q << " vertex " << point_to_string(ck.g.label(v)));
        REQUIRE(distance_vector(dt, v, ck.landmarks) == ck.g.label(v));
      }
      REQUIRE(is_resolving(dt, ck.landmarks).resolving);
    }
}

TEST_CASE("cross polytope landmarks have the expected small degree") {
  CkGraph ck = ck_q(2, 2);
  REQUIRE(ck.g.vertex_count() == 13);
  for (int v : ck.landmarks) REQUIRE(ck.g.degree(v) == 3);
  REQUIRE(metric_dimension(ck.g).value == 2);
}

TEST_CASE("mk family shape") {
  Graph m1 = mk(1);
  REQUIRE(m1.vertex_count() == 4);  // a path 0-1-2-3
  REQUIRE(m1.edge_count() == 3);
  REQUIRE(metric_dimension(m1).value == 1);

  Graph m2 = mk(2);
  REQUIRE(m2.vertex_count() == 11);
  REQUIRE(m2.edge_count() == 26);
  const int hub = m2.label_index().at({2, 2});
  REQUIRE(m2.degree(hub) == 8);
  DistanceTable dt = all_pairs_distances(m2);
  for (int v = 0; v < m2.vertex_count(); ++v) REQUIRE(dt.distance(hub, v) <= 2);

  Graph m3 = mk(3);
  REQUIRE(m3.vertex_count() == 27 + 3);
}

TEST_CASE("embedding labels vertices by their distance vectors") {
  Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  Graph e = embed_in_dk(p3, {0});
  REQUIRE(e.labels() == std::vector<LatticePoint>{{0}, {1}, {2}});

  Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  Graph ek = embed_in_dk(k3, {0, 1});
  REQUIRE(ek.labels() == std::vector<LatticePoint>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("embedding a cross polytope by its landmarks is the identity") {
  CkGraph ck = ck_q(2, 2);
  Graph e = embed_in_dk(ck.g, ck.landmarks);
  REQUIRE(e.labels() == ck.g.labels());
}

TEST_CASE("embedding rejects non-resolving sets and disconnected graphs") {
  Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  REQUIRE_THROWS_WITH(embed_in_dk(k3, {0}), Catch::Matchers::ContainsSubstring("1 and 2"));
  Graph split = build_graph(4, {{0, 1}, {2, 3}});
  REQUIRE_THROWS_AS(embed_in_dk(split, {0}), std::invalid_argument);
}

TEST_CASE("the base wheel cycle is the explicit 8-cycle") {
  HamiltonianCycle cyc = wheel_cycle(2);
  std::vector<LatticePoint> expect = {{0, 0}, {0, 1}, {0, 2}, {1, 2},
                                      {2, 2}, {2, 1}, {2, 0}, {1, 0}};
  REQUIRE(cyc.order == expect);
  REQUIRE(check_wheel_cycle(cyc).empty());
}

TEST_CASE("recursive wheel cycles satisfy all invariants") {
  for (int k = 2; k <= 5; ++k) {
    HamiltonianCycle cyc = wheel_cycle(k);
    long long expect = 1;
    for (int i = 0; i < k; ++i) expect *= 3;
    REQUIRE(static_cast<long long>(cyc.order.size()) == expect - 1);
    REQUIRE(check_wheel_cycle(cyc).empty());
  }
  REQUIRE_THROWS_AS(wheel_cycle(1), std::invalid_argument);
}

TEST_CASE("the invariant checker notices corrupted cycles") {
  HamiltonianCycle cyc = wheel_cycle(3);
  std::swap(cyc.order[3], cyc.order[10]);
  REQUIRE_FALSE(check_wheel_cycle(cyc).empty());

  HamiltonianCycle hub = wheel_cycle(2);
  hub.order[0] = {1, 1};
  REQUIRE_FALSE(check_wheel_cycle(hub).empty());
}

TEST_CASE("wheel host carries the rim, the hub and a resolving corner set") {
  WheelHost wh = wheel_host(2);
  REQUIRE(wh.host.vertex_count() == 13);
  REQUIRE(wh.cycle.size() == 8);
  REQUIRE(wh.host.label(wh.hub) == LatticePoint{2, 2});
  DistanceTable dt = all_pairs_distances(wh.host);
  REQUIRE(is_resolving(dt, wh.landmarks).resolving);
  REQUIRE(static_cast<int>(wh.landmarks.size()) == 2);

  WheelHost w3 = wheel_host(3);
  REQUIRE(w3.host.vertex_count() == 63);
  REQUIRE(w3.cycle.size() == 26);
  REQUIRE(w3.host.label(w3.hub) == LatticePoint{3, 3, 3});
}

TEST_CASE("binary window embeds complete bipartite graphs inside a clique") {
  for (int k = 1; k <= 4; ++k) {
    KnnGraph knn = knn_embedding(k);
    const int n = knn.g.vertex_count();
    REQUIRE(n == 1 << k);
    REQUIRE(knn.g.edge_count() == n * (n - 1) / 2);  // K_{2^k}
    REQUIRE(knn.part0.size() == knn.part1.size());
    REQUIRE(static_cast<int>(knn.part0.size()) == 1 << (k - 1));
    for (int u : knn.part0)
      for (int v : knn.part1) REQUIRE(knn.g.has_edge(u, v));
  }
  REQUIRE_THROWS_AS(knn_embedding(0), std::invalid_argument);
}

TEST_CASE("grids have the cartesian-power shape") {
  Graph g = grid(3, 2);
  REQUIRE(g.vertex_count() == 9);
  REQUIRE(g.edge_count() == 12);
  REQUIRE(all_pairs_distances(g).diameter() == 4);

  Graph q3 = grid(2, 3);
  REQUIRE(q3.vertex_count() == 8);
  REQUIRE(q3.edge_count() == 12);
  REQUIRE(all_pairs_distances(q3).diameter() == 3);

  Graph p5 = grid(5, 1);
  REQUIRE(p5.vertex_count() == 5);
  REQUIRE(p5.edge_count() == 4);

  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      Graph h = grid(n, d);
      long long m = static_cast<long long>(d) * (n - 1);
      for (int i = 1; i < d; ++i) m *= n;
      REQUIRE(h.edge_count() == m);
      REQUIRE(all_pairs_distances(h).diameter() == d * (n - 1));
    }
  REQUIRE_THROWS_AS(grid(1, 2), std::invalid_argument);
}

TEST_CASE("grid adjacency differs in exactly one coordinate by one") {
  Graph g = grid(3, 2);
  for (const Edge& e : g.edges()) {
    int diff = 0;
    for (int i = 0; i < 2; ++i) diff += std::abs(g.label(e.u)[i] - g.label(e.v)[i]);
    REQUIRE(diff == 1);
  }
}

TEST_CASE("hypercube shape and labels") {
  Graph k2 = hypercube(1);
  REQUIRE(k2.vertex_count() == 2);
  REQUIRE(k2.edge_count() == 1);

  Graph q3 = hypercube(3);
  REQUIRE(q3.vertex_count() == 8);
  REQUIRE(q3.edge_count() == 12);
  REQUIRE(all_pairs_distances(q3).diameter() == 3);
  REQUIRE(q3.label(1) == LatticePoint{0, 0, 1});
  REQUIRE(q3.label(4) == LatticePoint{1, 0, 0});
  REQUIRE_THROWS_AS(hypercube(0), std::invalid_argument);
  REQUIRE_THROWS_AS(hypercube(21), std::invalid_argument);
}

TEST_CASE("lattice graph dispatch matches the direct constructors") {
  LatticeGraphSpec window;
  window.kind = LatticeGraphSpec::Kind::window;
  window.k = 2;
  window.lo = {0, 0};
  window.hi = {1, 1};
  REQUIRE(build_lattice_graph(window).vertex_count() == 4);

  LatticeGraphSpec cross;
  cross.kind = LatticeGraphSpec::Kind::cross_polytope;
  cross.k = 2;
  cross.q = 2;
  REQUIRE(build_lattice_graph(cross).vertex_count() == 13);

  LatticeGraphSpec m;
  m.kind = LatticeGraphSpec::Kind::mk;
  m.k = 2;
  REQUIRE(build_lattice_graph(m).vertex_count() == 11);
}

TEST_CASE("sidon predicate on hand-checked sets") {
  REQUIRE(is_sidon({"00", "01", "10"}));
  REQUIRE_FALSE(is_sidon({"00", "01", "10", "11"}));  // 00+11 = 01+10 = 11
  REQUIRE(is_sidon({"0101"}));
  REQUIRE(is_sidon({}));
}

TEST_CASE("digit sums add coordinatewise") {
  REQUIRE(digit_sum("01", "11") == "12");
  REQUIRE(digit_sum("00", "00") == "00");
}

TEST_CASE("sidon sampling is deterministic and honest") {
  for (int k = 2; k <= 5; ++k)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      SidonSet a = sidon_sample(k, seed);
      SidonSet b = sidon_sample(k, seed);
      REQUIRE(a.members == b.members);
      REQUIRE(is_sidon(a.members));

      std::vector<std::vector<int>> rows;
      for (const std::string& s : a.members) {
        std::vector<int> row;
        for (char c : s) row.push_back(c - '0');
        rows.push_back(std::move(row));
      }
      REQUIRE(reference::brute_force_sidon_check(rows));
    }
}

TEST_CASE("sidon default target follows the cube-root rule") {
  REQUIRE(sidon_default_t(2) == 1);
  REQUIRE(sidon_default_t(3) == 2);
  REQUIRE(sidon_default_t(4) == 3);
}

TEST_CASE("sampling repairs collisions by dropping members") {
  // t = 4 at k = 2 forces all four strings, which is not Sidon, so the
  // repair pass must remove at least one.
  SidonSet s = sidon_sample(2, 4, 1);
  REQUIRE(s.members.size() < 4);
  REQUIRE(is_sidon(s.members));
  REQUIRE_THROWS_AS(sidon_sample(2, 5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(sidon_sample(1, 1, 1), std::invalid_argument);
}

TEST_CASE("clique gadget wiring on a pinned set") {
  SidonSet u;
  u.k = 2;
  u.members = {"00", "01", "10"};
  GadgetGraph gg = clique_gadget(2, u);
  REQUIRE(gg.clique_size == 3);
  REQUIRE(gg.g.vertex_count() == 7);
  REQUIRE(gg.landmarks == std::vector<int>{3, 4, 5, 6});
  // a_1 = 3 joins members with first digit 0, b_1 = 5 the rest.
  REQUIRE(gg.g.has_edge(3, 0));
  REQUIRE(gg.g.has_edge(3, 1));
  REQUIRE(gg.g.has_edge(5, 2));
  REQUIRE_FALSE(gg.g.has_edge(3, 2));
  // each member attaches once per digit position
  REQUIRE(gg.g.edge_count() == 3 + 2 * 3);

  DistanceTable dt = all_pairs_distances(gg.g);
  std::set<std::vector<int>> seen;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      REQUIRE(seen.insert(edge_distance_vector(dt, Edge{i, j}, gg.landmarks)).second);
}

TEST_CASE("clique gadget validates its input") {
  SidonSet bad;
  bad.k = 2;
  bad.members = {"00", "01", "10", "11"};
  REQUIRE_THROWS_AS(clique_gadget(2, bad), std::invalid_argument);

  SidonSet wrong;
  wrong.k = 3;
  wrong.members = {"000"};
  REQUIRE_THROWS_AS(clique_gadget(2, wrong), std::invalid_argument);
}
