#pragma once

// Graph serialization: the JSON schema {"n", "edges", "labels"?}, the plain
// edge-list text format ("n m" header, one "u v" per line), and DOT export.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mdim/graph.hpp"

namespace mdim {

using Json = nlohmann::ordered_json;

struct LoadedGraph {
  Graph g{1};
  std::vector<int> landmarks;  // optional "landmarks" field, empty if absent
};

inline Json graph_to_json(const Graph& g, const std::vector<int>& landmarks = {}) {
  Json j;
  j["n"] = g.vertex_count();
  auto& edges = j["edges"] = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  if (g.has_labels()) {
    auto& labels = j["labels"] = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  }
  if (!landmarks.empty()) j["landmarks"] = landmarks;
  return j;
}

inline LoadedGraph graph_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  LoadedGraph out;
  out.g = build_graph(n, edges);
  if (j.contains("labels")) {
    std::vector<LatticePoint> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<LatticePoint>());
    out.g.set_labels(std::move(labels));
  }
  if (j.contains("landmarks"))
    for (const auto& v : j.at("landmarks")) {
      const int id = v.get<int>();
      if (id < 0 || id >= n) throw std::invalid_argument("landmark id out of range");
      out.landmarks.push_back(id);
    }
  return out;
}

inline std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph graph_from_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list needs an \"n m\" header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list ended early");
    edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

inline std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << point_to_string(g.label(v)) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

// JSON files start with '{'; anything else is treated as an edge list.
inline LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  char first = 0;
  in >> first;
  in.putback(first);
  if (first == '{') {
    Json j;
    in >> j;
    return graph_from_json(j);
  }
  return {graph_from_edge_list(in), {}};
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

inline void save_graph_json(const std::string& path, const Graph& g,
                            const std::vector<int>& landmarks = {}) {
  save_text(path, graph_to_json(g, landmarks).dump(2) + "\n");
}

}  // namespace mdim
