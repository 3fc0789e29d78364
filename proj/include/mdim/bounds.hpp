#pragma once

// Dimension bounds stated as inequalities between integer powers. Every
// real-valued ceiling is restated as "least k such that a^k >= target" and
// evaluated in arbitrary-precision integer arithmetic, so no floating-point
// rounding can move a bound across an integer.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

using BigInt = boost::multiprecision::cpp_int;

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, long long>> inputs;
  int bound = 0;
};

inline BigInt big_pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// Least k >= 1 with k + D^k >= n. A graph of diameter D with a resolving set
// of size k has at most k + D^k vertices.
inline BoundReport order_bound_dim(long long n, long long D) {
  if (n < 1 || D < 0) throw std::invalid_argument("order_bound_dim: need n >= 1, D >= 0");
  int k = 1;
  while (k + big_pow(D, static_cast<unsigned>(k)) < n) ++k;
  return {"order_bound_dim", {{"n", n}, {"D", D}}, k};
}

// Least k >= 1 with (D+1)^k >= m. An edge resolving set of size k permits at
// most (D+1)^k edges.
inline BoundReport edge_bound_edim(long long m, long long D) {
  if (m < 1 || D < 0) throw std::invalid_argument("edge_bound_edim: need m >= 1, D >= 0");
  int k = 1;
  while (big_pow(D + 1, static_cast<unsigned>(k)) < m) ++k;
  return {"edge_bound_edim", {{"m", m}, {"D", D}}, k};
}

// ceil(d*log(n) / log(d(n-1)+1)), evaluated as the least k with
// (d(n-1)+1)^k >= n^d. Lower bound on dim(P_n^d).
inline BoundReport grid_dim_lower_bound(long long n, long long d) {
  if (n < 2 || d < 1) throw std::invalid_argument("grid_dim_lower_bound: need n >= 2, d >= 1");
  const BigInt base = d * (n - 1) + 1;
  const BigInt target = big_pow(n, static_cast<unsigned>(d));
  int k = 1;
  while (big_pow(base, static_cast<unsigned>(k)) < target) ++k;
  return {"grid_dim_lower_bound", {{"n", n}, {"d", d}}, k};
}

// ceil((log d + log(n-1) + (d-1) log n) / log(d(n-1)+1)), evaluated as the
// least k >= 1 with (d(n-1)+1)^k >= d(n-1)n^{d-1}. Lower bound on edim(P_n^d).
inline BoundReport grid_edim_lower_bound(long long n, long long d) {
  if (n < 2 || d < 1) throw std::invalid_argument("grid_edim_lower_bound: need n >= 2, d >= 1");
  const BigInt base = d * (n - 1) + 1;
  const BigInt target = BigInt(d) * (n - 1) * big_pow(n, static_cast<unsigned>(d - 1));
  int k = 1;
  while (big_pow(base, static_cast<unsigned>(k)) < target) ++k;
  return {"grid_edim_lower_bound", {{"n", n}, {"d", d}}, k};
}

// For every vertex v within distance 2 of all vertices, x = n-1-deg(v) gives
// edim(G) >= n-1-x-2^x. Reports the best such bound, floored at 0.
inline BoundReport dominant_vertex_edim_bound(const Graph& g) {
  const int n = g.vertex_count();
  const DistanceTable dt = all_pairs_distances(g);
  BigInt best = 0;
  long long best_x = -1;
  for (int v = 0; v < n; ++v) {
    bool dominant = true;
    for (int u = 0; u < n && dominant; ++u)
      if (dt.distance(v, u) > 2) dominant = false;
    if (!dominant) continue;
    const long long x = n - 1 - g.degree(v);
    const BigInt bound = BigInt(n) - 1 - x - big_pow(2, static_cast<unsigned>(x));
    if (bound > best) {
      best = bound;
      best_x = x;
    }
  }
  return {"dominant_vertex_edim_bound",
          {{"n", n}, {"x", best_x}},
          static_cast<int>(best)};
}

// Largest n with 2^n <= (n+1)^k. The ratio (n+1)^k / 2^n is unimodal and is
// >= 1 at n=1, so the feasible n form a prefix; scan until the first failure.
inline int hypercube_dim_order_bound(int k) {
  if (k < 1) throw std::invalid_argument("hypercube_dim_order_bound: need k >= 1");
  int best = 0;
  for (int n = 1;; ++n) {
    if (big_pow(2, static_cast<unsigned>(n)) > big_pow(n + 1, static_cast<unsigned>(k))) break;
    best = n;
  }
  return best;
}

}  // namespace mdim
