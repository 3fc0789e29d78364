#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

// A point of the nonnegative integer lattice; vertex identity in the
// lattice-derived graph families.
using LatticePoint = std::vector<int>;

inline int linf_distance(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice points of different dimension");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline std::string point_to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// Undirected edge, endpoints normalized so u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("self-loop is not an edge");
  }

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency is kept both
// as sorted neighbor lists and as per-vertex neighbor bitmasks; optional
// lattice-coordinate labels identify vertices of lattice-derived families.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    words_ = (n + 63) / 64;
    adj_.resize(n);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (has_edge(u, v)) return;  // duplicates collapse
    set_bit(u, v);
    set_bit(v, u);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
    finalized_ = false;
  }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    finalize();
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  // Edges sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const {
    finalize();
    return edges_;
  }

  bool has_labels() const { return !labels_.empty(); }

  const std::vector<LatticePoint>& labels() const {
    if (!has_labels()) throw std::logic_error("graph has no lattice labels");
    return labels_;
  }

  const LatticePoint& label(int v) const {
    check_vertex(v);
    return labels().at(static_cast<std::size_t>(v));
  }

  int label_dimension() const { return static_cast<int>(labels().front().size()); }

  // Attach lattice labels. The map must be injective, all coordinates
  // nonnegative, and adjacent vertices must differ by at most 1 per coordinate.
  void set_labels(std::vector<LatticePoint> labels) {
    if (static_cast<int>(labels.size()) != n_)
      throw std::invalid_argument("label count must match vertex count");
    const std::size_t k = labels.front().size();
    if (k == 0) throw std::invalid_argument("lattice labels need dimension >= 1");
    std::map<LatticePoint, int> seen;
    for (int v = 0; v < n_; ++v) {
      if (labels[v].size() != k) throw std::invalid_argument("inconsistent label dimensions");
      for (int c : labels[v])
        if (c < 0) throw std::invalid_argument("lattice coordinates must be nonnegative");
      auto [it, fresh] = seen.emplace(labels[v], v);
      if (!fresh)
        throw std::invalid_argument("labels not injective: vertices " + std::to_string(it->second) +
                                    " and " + std::to_string(v));
    }
    for (const Edge& e : edges())
      if (linf_distance(labels[e.u], labels[e.v]) > 1)
        throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " joins labels farther than 1 apart");
    labels_ = std::move(labels);
  }

  bool is_connected() const {
    if (n_ == 1) return true;
    std::vector<char> vis(n_, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj_[u])
        if (!vis[w]) {
          vis[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    return reached == n_;
  }

  // Lookup table label -> vertex id for labeled graphs.
  std::map<LatticePoint, int> label_index() const {
    std::map<LatticePoint, int> idx;
    const auto& ls = labels();
    for (int v = 0; v < n_; ++v) idx.emplace(ls[v], v);
    return idx;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
  }

  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  }

  void finalize() const {
    if (finalized_) return;
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    std::sort(edges_.begin(), edges_.end());
    finalized_ = true;
  }

  int n_ = 0;
  int words_ = 0;
  mutable bool finalized_ = true;
  mutable std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
  mutable std::vector<Edge> edges_;
  std::vector<LatticePoint> labels_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// All-pairs hop counts. Unreachable pairs carry a sentinel strictly larger
// than any possible hop count so comparisons in the solvers stay safe.
class DistanceTable {
 public:
  static constexpr int kUnreachable = 0xFFFF;

  DistanceTable() = default;
  DistanceTable(int n, std::vector<std::uint16_t> d, int diameter)
      : n_(n), d_(std::move(d)), diameter_(diameter) {}

  int size() const { return n_; }
  int diameter() const { return diameter_; }

  int distance(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  const std::uint16_t* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

 private:
  int n_ = 0;
  std::vector<std::uint16_t> d_;
  int diameter_ = 0;
};

inline DistanceTable all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= DistanceTable::kUnreachable)
    throw std::invalid_argument("graph too large for 16-bit distance table");
  std::vector<std::uint16_t> dist(static_cast<std::size_t>(n) * n, DistanceTable::kUnreachable);
  int diameter = 0;
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    auto* row = dist.data() + static_cast<std::size_t>(s) * n;
    queue.clear();
    queue.push_back(s);
    row[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      const std::uint16_t du = row[u];
      for (int w : g.neighbors(u))
        if (row[w] == DistanceTable::kUnreachable) {
          row[w] = static_cast<std::uint16_t>(du + 1);
          diameter = std::max(diameter, du + 1);
          queue.push_back(w);
        }
    }
  }
  return DistanceTable(n, std::move(dist), diameter);
}

// d(e, w) = min over the endpoints of e of their distance to w.
inline int edge_distance(const DistanceTable& dt, const Edge& e, int w) {
  return std::min(dt.distance(e.u, w), dt.distance(e.v, w));
}

inline std::vector<int> distance_vector(const DistanceTable& dt, int v,
                                        const std::vector<int>& landmarks) {
  std::vector<int> out;
  out.reserve(landmarks.size());
  for (int s : landmarks) out.push_back(dt.distance(v, s));
  return out;
}

inline std::vector<int> edge_distance_vector(const DistanceTable& dt, const Edge& e,
                                             const std::vector<int>& landmarks) {
  std::vector<int> out;
  out.reserve(landmarks.size());
  for (int s : landmarks) out.push_back(edge_distance(dt, e, s));
  return out;
}

}  // namespace mdim
