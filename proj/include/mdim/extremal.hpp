#pragma once

// Classical invariants used by the extremal arguments: degeneracy with an
// elimination order, the parity (mod 2) coloring of lattice-labeled graphs,
// exact chromatic and clique numbers for small graphs, and the landmark
// degree check.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/bounds.hpp"
#include "mdim/graph.hpp"

namespace mdim {

struct DegeneracyResult {
  int value = 0;
  std::vector<int> elimination_order;  // vertex removed at each step
};

// Repeatedly delete a minimum-degree vertex (least id on ties); the value is
// the largest degree seen at deletion time.
inline DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> gone(n, 0);
  DegeneracyResult out;
  out.elimination_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    out.value = std::max(out.value, deg[best]);
    gone[best] = 1;
    out.elimination_order.push_back(best);
    for (int w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return out;
}

struct ParityColoring {
  std::vector<int> colors;
  int color_count = 0;
};

// color(v) = label(v) mod 2 coordinatewise. Adjacent vertices have distinct
// labels differing by at most 1 per coordinate, so they differ by exactly 1
// somewhere and get different parities there; at most 2^k colors.
inline ParityColoring parity_coloring(const Graph& g) {
  if (!g.has_labels()) throw std::invalid_argument("parity_coloring: graph has no labels");
  const int n = g.vertex_count();
  std::map<LatticePoint, int> ids;
  std::vector<LatticePoint> parities(n);
  for (int v = 0; v < n; ++v) {
    LatticePoint par = g.label(v);
    for (int& c : par) c &= 1;
    ids.emplace(par, 0);
    parities[v] = std::move(par);
  }
  int next = 0;
  for (auto& [key, id] : ids) id = next++;  // color ids in lex order of parity vectors

  ParityColoring out;
  out.color_count = next;
  out.colors.reserve(n);
  for (int v = 0; v < n; ++v) out.colors.push_back(ids[parities[v]]);
  for (const Edge& e : g.edges())
    if (out.colors[e.u] == out.colors[e.v])
      throw std::logic_error("parity_coloring: coloring not proper on edge " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
  return out;
}

namespace detail {

struct ColoringSearch {
  const Graph* g;
  std::vector<int> order;  // vertices, highest degree first
  std::vector<int> color;  // 0 = uncolored

  // Color symmetry is broken by allowing at most one brand-new color per
  // step: any proper coloring can be relabeled so colors first appear in
  // increasing order, so this stays complete.
  bool feasible(int pos, int prefix_max, int limit) {
    if (pos == static_cast<int>(order.size())) return true;
    const int v = order[pos];
    for (int c = 1; c <= std::min(limit, prefix_max + 1); ++c) {
      bool clash = false;
      for (int w : g->neighbors(v))
        if (color[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[v] = c;
      const bool ok = feasible(pos + 1, std::max(prefix_max, c), limit);
      color[v] = 0;
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace detail

// Exact chromatic number by testing k-colorability for increasing k.
// Graphs above the cap get no value (deterministic refusal, not a timeout).
inline std::optional<int> chromatic_number_exact(const Graph& g, int cap = 20) {
  const int n = g.vertex_count();
  if (n > cap) return std::nullopt;
  if (g.edge_count() == 0) return 1;
  detail::ColoringSearch search;
  search.g = &g;
  search.color.assign(n, 0);
  search.order.resize(n);
  for (int v = 0; v < n; ++v) search.order[v] = v;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 2; k <= n; ++k)
    if (search.feasible(0, 0, k)) return k;
  return n;
}

// Exact maximum clique by branch and bound over neighbor bitmasks.
inline std::optional<int> clique_number_exact(const Graph& g, int cap = 20) {
  const int n = g.vertex_count();
  if (n > cap || n > 64) return std::nullopt;
  std::vector<std::uint64_t> nb(n, 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= std::uint64_t{1} << e.v;
    nb[e.v] |= std::uint64_t{1} << e.u;
  }
  int best = 0;
  // Extend the clique with candidates from `cand`, all adjacent to everything chosen.
  auto extend = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size + __builtin_popcountll(cand) <= best) return;
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    while (cand) {
      if (size + __builtin_popcountll(cand) <= best) return;
      const int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      self(self, nb[v] & cand, size + 1);
    }
  };
  extend(extend, n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  return best;
}

// True iff every landmark of the size-k resolving set has degree at most
// 3^{k-1}; a false result would falsify the minimum-degree theorem.
inline bool landmark_degree_check(const Graph& g, const std::vector<int>& S) {
  const BigInt limit = big_pow(3, S.empty() ? 0u : static_cast<unsigned>(S.size() - 1));
  for (int v : S)
    if (BigInt(g.degree(v)) > limit) return false;
  return true;
}

struct InvariantReport {
  int order = 0;
  int size = 0;
  int max_degree = 0;
  int min_degree = 0;
  int degeneracy = 0;
  std::optional<int> clique_number;
  std::optional<int> chromatic_number;
};

inline InvariantReport invariant_report(const Graph& g, int cap = 20) {
  InvariantReport r;
  r.order = g.vertex_count();
  r.size = g.edge_count();
  r.max_degree = g.max_degree();
  r.min_degree = g.min_degree();
  r.degeneracy = degeneracy(g).value;
  r.clique_number = clique_number_exact(g, cap);
  r.chromatic_number = chromatic_number_exact(g, cap);
  return r;
}

}  // namespace mdim
