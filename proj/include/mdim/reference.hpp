#pragma once

// Slow reference implementations used to cross-check the real solvers and
// bound calculators. Everything here takes the most direct route available
// (exhaustive enumeration, textbook formulas, floating point logs) and shares
// no code with the optimized paths it is checked against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim::reference {

// All-pairs distances via Floyd-Warshall; independent of the BFS table.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = DistanceTable::kUnreachable;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == inf) continue;
      for (int j = 0; j < n; ++j)
        if (d[k][j] != inf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

inline bool naive_is_resolving(const DistanceTable& dt, int n, const std::vector<int>& set) {
  std::set<std::vector<int>> seen;
  for (int v = 0; v < n; ++v)
    if (!seen.insert(distance_vector(dt, v, set)).second) return false;
  return true;
}

inline bool naive_is_edge_resolving(const DistanceTable& dt, const std::vector<Edge>& edges,
                                    const std::vector<int>& set) {
  std::set<std::vector<int>> seen;
  for (const Edge& e : edges)
    if (!seen.insert(edge_distance_vector(dt, e, set)).second) return false;
  return true;
}

namespace detail {
// Visit all size-k subsets of 0..n-1 in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace detail

// Exact metric dimension by plain enumeration of every landmark subset,
// smallest size first, lexicographic within a size. No reductions, no pruning.
inline std::pair<int, std::vector<int>> naive_metric_dimension(const Graph& g) {
  const DistanceTable dt = all_pairs_distances(g);
  const int n = g.vertex_count();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> witness;
    if (detail::for_each_subset(n, k, [&](const std::vector<int>& s) {
          if (naive_is_resolving(dt, n, s)) {
            witness = s;
            return true;
          }
          return false;
        }))
      return {k, witness};
  }
  return {n, {}};
}

inline std::pair<int, std::vector<int>> naive_edge_metric_dimension(const Graph& g) {
  const DistanceTable dt = all_pairs_distances(g);
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> witness;
    if (detail::for_each_subset(n, k, [&](const std::vector<int>& s) {
          if (naive_is_edge_resolving(dt, edges, s)) {
            witness = s;
            return true;
          }
          return false;
        }))
      return {k, witness};
  }
  return {n, {}};
}

// Degeneracy by repeatedly deleting a minimum-degree vertex (quadratic).
inline int naive_degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int round = 0; round < n; ++round) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (alive[u] && (v == -1 || deg[u] < deg[v])) v = u;
    best = std::max(best, deg[v]);
    alive[v] = 0;
    for (int w : g.neighbors(v))
      if (alive[w]) --deg[w];
  }
  return best;
}

// ---- direct evaluations of the closed-form bounds (floating point route) ----

inline int oracle_order_bound_dim(long long n, long long diameter) {
  for (int k = 1;; ++k) {
    long double v = k + std::pow(static_cast<long double>(diameter), static_cast<long double>(k));
    if (v >= static_cast<long double>(n)) return k;
  }
}

inline int oracle_edge_bound_edim(long long m, long long diameter) {
  for (int k = 1;; ++k) {
    long double v = std::pow(static_cast<long double>(diameter + 1), static_cast<long double>(k));
    if (v >= static_cast<long double>(m)) return k;
  }
}

inline int oracle_grid_dim_lower_bound(long long n, long long d) {
  if (n < 2) return 1;
  long double val = d * std::log(static_cast<long double>(n)) /
                    std::log(static_cast<long double>(d * (n - 1) + 1));
  return std::max(1, static_cast<int>(std::ceil(val - 1e-12L)));
}

inline int oracle_grid_edim_lower_bound(long long n, long long d) {
  if (n < 2) return 1;
  long double num = std::log(static_cast<long double>(d)) +
                    std::log(static_cast<long double>(n - 1)) +
                    (d - 1) * std::log(static_cast<long double>(n));
  long double val = num / std::log(static_cast<long double>(d * (n - 1) + 1));
  return std::max(1, static_cast<int>(std::ceil(val - 1e-12L)));
}

inline int oracle_hypercube_dim_order_bound(int k) {
  // Largest n with 2^n <= (n+1)^k, i.e. n <= k*log2(n+1). The ratio
  // n / log2(n+1) is increasing in n, so the feasible n form a prefix; scan
  // upward until the inequality first fails.
  int best = 0;
  for (int n = 1;; ++n) {
    long double lhs = n;
    long double rhs = k * std::log2(static_cast<long double>(n + 1));
    if (lhs > rhs + 1e-12L) break;
    best = n;
  }
  return best;
}

// ---- Sidon sets ----

// O(t^4) check straight from the definition: all coordinatewise sums over
// unordered member pairs (repeats allowed) must be pairwise distinct.
inline bool brute_force_sidon_check(const std::vector<std::vector<int>>& members) {
  const auto sum = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
  };
  const int t = static_cast<int>(members.size());
  for (int a = 0; a < t; ++a)
    for (int b = a; b < t; ++b)
      for (int c = 0; c < t; ++c)
        for (int d = c; d < t; ++d) {
          if (a == c && b == d) continue;
          if (sum(members[a], members[b]) == sum(members[c], members[d])) return false;
        }
  return true;
}

// ---- random connected graphs for property tests ----

// Random spanning tree plus Bernoulli extra edges; connected by construction
// and fully determined by the rng state.
inline Graph random_connected_graph(int n, double extra_edge_prob, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(v, pick(rng));
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng) < extra_edge_prob) g.add_edge(u, v);
  return g;
}

}  // namespace mdim::reference
