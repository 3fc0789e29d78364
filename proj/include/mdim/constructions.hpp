#pragma once

// Every graph family used in the theorems: D_k windows, cross-polytope
// graphs C_k(q), the M_k family, grids P_n^d, hypercubes, the {0,1}^k
// embedding, the recursive wheel Hamiltonian cycle, and the Sidon clique
// gadget.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/sidon.hpp"
#include "mdim/solver.hpp"

namespace mdim {

namespace detail {

// Lexicographic enumeration of the integer box [lo, hi].
inline std::vector<LatticePoint> box_points(const LatticePoint& lo, const LatticePoint& hi) {
  const std::size_t k = lo.size();
  long long count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("empty box");
    count *= hi[i] - lo[i] + 1;
    if (count > 300000) throw std::invalid_argument("lattice window too large");
  }
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  LatticePoint p = lo;
  for (;;) {
    pts.push_back(p);
    std::size_t i = k;
    while (i > 0 && p[i - 1] == hi[i - 1]) {
      --i;
      p[i] = lo[i];
    }
    if (i == 0) break;
    ++p[i - 1];
  }
  return pts;
}

// Induced subgraph of D_k on the given points: edges between L-infinity
// distance 1 pairs. Points must be sorted (ids follow that order).
inline Graph induced_dk(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("no lattice points");
  const std::size_t k = pts.front().size();
  std::map<LatticePoint, int> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<int>(i));

  Graph g(static_cast<int>(pts.size()));
  LatticePoint nb(k);
  std::vector<int> offset(k, -1);
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::fill(offset.begin(), offset.end(), -1);
    for (;;) {
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        nb[i] = pts[v][i] + offset[i];
        if (offset[i] != 0) zero = false;
      }
      if (!zero) {
        auto it = index.find(nb);
        if (it != index.end() && it->second > static_cast<int>(v))
          g.add_edge(static_cast<int>(v), it->second);
      }
      std::size_t i = k;
      while (i > 0 && offset[i - 1] == 1) offset[--i] = -1;
      if (i == 0) break;
      ++offset[i - 1];
    }
  }
  g.set_labels(pts);
  return g;
}

}  // namespace detail

struct LatticeGraphSpec {
  enum class Kind { window, cross_polytope, mk };
  Kind kind = Kind::window;
  int k = 1;
  LatticePoint lo, hi;  // window only
  int q = 1;            // cross_polytope only
};

// All integer points of the box [lo, hi], adjacent when they differ by at
// most one in every coordinate.
inline Graph dk_window(int k, const LatticePoint& lo, const LatticePoint& hi) {
  if (k < 1) throw std::invalid_argument("dk_window: need k >= 1");
  if (static_cast<int>(lo.size()) != k || static_cast<int>(hi.size()) != k)
    throw std::invalid_argument("dk_window: lo/hi must have k coordinates");
  for (int c : lo)
    if (c < 0) throw std::invalid_argument("dk_window: D_k lives on nonnegative coordinates");
  return detail::induced_dk(detail::box_points(lo, hi));
}

struct CkGraph {
  Graph g;
  std::vector<int> landmarks;  // ids of v_1..v_k (i-th coordinate 0, others q)
};

// Integer points x >= 0 with sum |x_i - q| <= q: the cross polytope (L1
// ball) of radius q centered at (q,...,q). Its corners along the negative
// axes are exactly the k landmark points v_i, and the facet spanned by them
// is the (k-1)-simplex the paper describes. For every member x the graph
// distance to v_i equals x_i, so {v_1..v_k} resolves by construction.
inline CkGraph ck_q(int k, int q) {
  if (k < 1 || q < 1) throw std::invalid_argument("ck_q: need k >= 1, q >= 1");
  const LatticePoint lo(k, 0), hi(k, 2 * q);
  std::vector<LatticePoint> pts;
  for (auto& p : detail::box_points(lo, hi)) {
    int l1 = 0;
    for (int i = 0; i < k; ++i) l1 += p[i] < q ? q - p[i] : p[i] - q;
    if (l1 <= q) pts.push_back(std::move(p));
  }
  CkGraph out{detail::induced_dk(pts), {}};
  const auto index = out.g.label_index();
  for (int i = 0; i < k; ++i) {
    LatticePoint vi(k, q);
    vi[i] = 0;
    auto it = index.find(vi);
    if (it == index.end()) throw std::logic_error("ck_q: corner v_i missing from vertex set");
    out.landmarks.push_back(it->second);
  }
  return out;
}

// Induced subgraph of D_k on {1,2,3}^k plus the k points with one
// coordinate 0 and the rest 2. Order 3^k + k.
inline Graph mk(int k) {
  if (k < 1) throw std::invalid_argument("mk: need k >= 1");
  std::vector<LatticePoint> pts = detail::box_points(LatticePoint(k, 1), LatticePoint(k, 3));
  for (int i = 0; i < k; ++i) {
    LatticePoint p(k, 2);
    p[i] = 0;
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  return detail::induced_dk(pts);
}

// Label every vertex with its distance vector to S. The result lives in
// D_|S|: adjacent vertices get vectors differing by at most 1 per
// coordinate (triangle inequality), and resolving means the map is
// injective.
inline Graph embed_in_dk(const Graph& g, const std::vector<int>& S) {
  if (!g.is_connected()) throw std::invalid_argument("embed_in_dk: graph must be connected");
  const DistanceTable dt = all_pairs_distances(g);
  const ResolveCheck chk = is_resolving(dt, S);
  if (!chk.resolving)
    throw std::invalid_argument("embed_in_dk: set is not resolving, vertices " +
                                std::to_string(chk.counterexample->first) + " and " +
                                std::to_string(chk.counterexample->second) + " collide");
  std::vector<LatticePoint> labels;
  labels.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(distance_vector(dt, v, S));
  Graph out = g;
  out.set_labels(std::move(labels));
  return out;
}

struct HamiltonianCycle {
  int k = 0;
  std::vector<LatticePoint> order;  // cyclic, covers {0,1,2}^k minus (1,...,1)
};

// The proof's recursive Hamiltonian cycle on {0,1,2}^k \ {1}^k. Base case
// k=2 is the paper's explicit 8-cycle; the step glues the three shifted
// copies through 0.1^k and 2.1^k, revisiting prefix 1 in two runs.
inline HamiltonianCycle wheel_cycle(int k) {
  if (k < 2) throw std::invalid_argument("wheel_cycle: need k >= 2");
  HamiltonianCycle cyc;
  cyc.k = 2;
  cyc.order = {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 1}, {2, 0}, {1, 0}};
  auto prepend = [](int digit, const LatticePoint& p) {
    LatticePoint out;
    out.reserve(p.size() + 1);
    out.push_back(digit);
    out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  while (cyc.k < k) {
    const std::vector<LatticePoint> a = std::move(cyc.order);
    const std::size_t j = a.size();
    const LatticePoint ones(cyc.k, 1);
    cyc.order.clear();
    cyc.order.reserve(3 * j + 2);
    for (std::size_t i = 0; i < j; ++i) cyc.order.push_back(prepend(0, a[i]));
    cyc.order.push_back(prepend(0, ones));
    for (std::size_t i = j; i-- > 1;) cyc.order.push_back(prepend(1, a[i]));
    for (std::size_t i = 0; i < j; ++i) cyc.order.push_back(prepend(2, a[i]));
    cyc.order.push_back(prepend(2, ones));
    cyc.order.push_back(prepend(1, a[0]));
    ++cyc.k;
  }
  return cyc;
}

// The three HamiltonianCycle invariants. Returns an empty string when all
// hold, otherwise a description of the first violation.
inline std::string check_wheel_cycle(const HamiltonianCycle& cyc) {
  long long expect = 1;
  for (int i = 0; i < cyc.k; ++i) expect *= 3;
  --expect;
  if (static_cast<long long>(cyc.order.size()) != expect)
    return "cycle length " + std::to_string(cyc.order.size()) + ", expected " +
           std::to_string(expect);
  const LatticePoint hub(cyc.k, 1);
  std::map<LatticePoint, int> seen;
  for (const auto& p : cyc.order) {
    if (static_cast<int>(p.size()) != cyc.k) return "point of wrong dimension";
    for (int c : p)
      if (c < 0 || c > 2) return "coordinate outside {0,1,2} at " + point_to_string(p);
    if (p == hub) return "cycle visits the hub";
    if (!seen.emplace(p, 1).second) return "repeated point " + point_to_string(p);
    if (linf_distance(p, hub) != 1) return "point not adjacent to hub: " + point_to_string(p);
  }
  for (std::size_t i = 0; i < cyc.order.size(); ++i) {
    const auto& p = cyc.order[i];
    const auto& r = cyc.order[(i + 1) % cyc.order.size()];
    if (linf_distance(p, r) != 1)
      return "consecutive points not adjacent: " + point_to_string(p) + " " + point_to_string(r);
  }
  return "";
}

struct WheelHost {
  Graph host;                  // C_k(k) graph
  std::vector<int> landmarks;  // its v_1..v_k, a resolving set
  std::vector<int> cycle;      // wheel rim, translated into the host
  int hub = -1;                // wheel center (k,...,k)
};

// A graph of metric dimension <= k containing the wheel W_{3^k-1}: the host
// C_k(q) with q = k contains the translated window (q-1..q+1)^k, whose
// center is the hub and whose remaining points carry the Hamiltonian cycle.
inline WheelHost wheel_host(int k) {
  if (k < 2) throw std::invalid_argument("wheel_host: need k >= 2");
  CkGraph ck = ck_q(k, k);
  WheelHost out{std::move(ck.g), std::move(ck.landmarks), {}, -1};
  const auto index = out.host.label_index();
  const int offset = k - 1;
  const HamiltonianCycle cyc = wheel_cycle(k);
  for (const auto& p : cyc.order) {
    LatticePoint q(p);
    for (int& c : q) c += offset;
    auto it = index.find(q);
    if (it == index.end()) throw std::logic_error("wheel_host: translated rim point missing");
    out.cycle.push_back(it->second);
  }
  auto hub = index.find(LatticePoint(k, k));
  if (hub == index.end()) throw std::logic_error("wheel_host: hub missing");
  out.hub = hub->second;
  for (std::size_t i = 0; i < out.cycle.size(); ++i) {
    if (!out.host.has_edge(out.cycle[i], out.cycle[(i + 1) % out.cycle.size()]))
      throw std::logic_error("wheel_host: rim edge missing from host");
    if (!out.host.has_edge(out.hub, out.cycle[i]))
      throw std::logic_error("wheel_host: spoke missing from host");
  }
  return out;
}

struct KnnGraph {
  Graph g;                  // induced subgraph of D_k on {0,1}^k (a clique)
  std::vector<int> part0;   // first coordinate 0
  std::vector<int> part1;   // first coordinate 1
};

// Induced subgraph of D_k on {0,1}^k. Any two such points are at L-infinity
// distance <= 1, so this is K_{2^k}; split by first coordinate it contains
// K_{2^{k-1},2^{k-1}} across the parts.
inline KnnGraph knn_embedding(int k) {
  if (k < 1) throw std::invalid_argument("knn_embedding: need k >= 1");
  if (k > 12) throw std::invalid_argument("knn_embedding: k too large");
  KnnGraph out{detail::induced_dk(detail::box_points(LatticePoint(k, 0), LatticePoint(k, 1))),
               {},
               {}};
  for (int v = 0; v < out.g.vertex_count(); ++v)
    (out.g.label(v)[0] == 0 ? out.part0 : out.part1).push_back(v);
  return out;
}

// P_n^d: d-fold Cartesian power of the path, vertices [0,n-1]^d, adjacent
// when exactly one coordinate differs by exactly 1.
inline Graph grid(int n, int d) {
  if (n < 2 || d < 1) throw std::invalid_argument("grid: need n >= 2, d >= 1");
  const std::vector<LatticePoint> pts =
      detail::box_points(LatticePoint(d, 0), LatticePoint(d, n - 1));
  Graph g(static_cast<int>(pts.size()));
  // In lexicographic order, increasing coordinate i by 1 advances the id by
  // n^(d-1-i).
  std::vector<int> stride(d, 1);
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
  for (std::size_t v = 0; v < pts.size(); ++v)
    for (int i = 0; i < d; ++i)
      if (pts[v][i] + 1 < n) g.add_edge(static_cast<int>(v), static_cast<int>(v) + stride[i]);
  g.set_labels(pts);
  return g;
}

// Q_n: binary strings of length n, adjacent at Hamming distance 1.
inline Graph hypercube(int n) {
  if (n < 1) throw std::invalid_argument("hypercube: need n >= 1");
  if (n > 20) throw std::invalid_argument("hypercube: n too large");
  const int size = 1 << n;
  Graph g(size);
  std::vector<LatticePoint> labels(size, LatticePoint(n, 0));
  for (int v = 0; v < size; ++v) {
    for (int bit = 0; bit < n; ++bit) {
      labels[v][n - 1 - bit] = v >> bit & 1;
      if (!(v >> bit & 1)) g.add_edge(v, v | 1 << bit);
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

struct GadgetGraph {
  Graph g;
  int clique_size = 0;         // ids 0..clique_size-1, in lex order of U
  std::vector<int> landmarks;  // a_1..a_k then b_1..b_k
};

// Clique on the Sidon set U plus 2k attachment vertices: a_i joins the
// strings with i-th digit 0, b_i those with i-th digit 1. The edge distance
// vector of a clique edge {u,v} w.r.t. (a_1..a_k, b_1..b_k) encodes the
// digit sum u+v, so distinct clique edges are distinguished exactly when U
// is Sidon.
inline GadgetGraph clique_gadget(int k, const SidonSet& U) {
  if (k < 1) throw std::invalid_argument("clique_gadget: need k >= 1");
  if (U.k != k) throw std::invalid_argument("clique_gadget: Sidon set has wrong string length");
  if (U.members.empty()) throw std::invalid_argument("clique_gadget: empty Sidon set");
  if (!is_sidon(U.members)) throw std::invalid_argument("clique_gadget: set is not Sidon");
  const int u = static_cast<int>(U.members.size());
  Graph g(u + 2 * k);
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j) g.add_edge(i, j);
  for (int i = 0; i < k; ++i) {
    const int ai = u + i, bi = u + k + i;
    for (int v = 0; v < u; ++v)
      U.members[v][i] == '0' ? g.add_edge(ai, v) : g.add_edge(bi, v);
  }
  GadgetGraph out{std::move(g), u, {}};
  for (int i = 0; i < 2 * k; ++i) out.landmarks.push_back(u + i);
  return out;
}

inline Graph build_lattice_graph(const LatticeGraphSpec& spec) {
  switch (spec.kind) {
    case LatticeGraphSpec::Kind::window:
      return dk_window(spec.k, spec.lo, spec.hi);
    case LatticeGraphSpec::Kind::cross_polytope:
      return ck_q(spec.k, spec.q).g;
    case LatticeGraphSpec::Kind::mk:
      return mk(spec.k);
  }
  throw std::invalid_argument("build_lattice_graph: unknown kind");
}

}  // namespace mdim
