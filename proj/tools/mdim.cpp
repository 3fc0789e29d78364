// Command-line front end: generate the paper's graph families, compute and
// verify (edge) metric dimension, report invariants, and run the claim
// suite. Exit codes: 0 success, 1 claim or verification failure, 2 usage
// error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mdim/bounds.hpp"
#include "mdim/constructions.hpp"
#include "mdim/extremal.hpp"
#include "mdim/graph.hpp"
#include "mdim/io.hpp"
#include "mdim/sidon.hpp"
#include "mdim/solver.hpp"
#include "mdim/suite.hpp"

namespace {

using mdim::Json;

Json certificate_to_json(const mdim::Certificate& cert, const mdim::Graph& g, bool verbose) {
  Json j;
  j["kind"] = cert.kind == mdim::ResolveKind::vertex ? "vertex" : "edge";
  j["value"] = cert.value;
  j["witness"] = cert.witness;
  j["exhausted"] = cert.exhausted;
  j["elapsed_ms"] = cert.elapsed_ms;
  if (!cert.complete) j["complete"] = false;
  if (verbose) {
    auto& refs = j["refutations"] = Json::array();
    for (const auto& [set, pair] : cert.refutations) {
      Json entry;
      entry["set"] = set;
      if (cert.kind == mdim::ResolveKind::vertex) {
        entry["collide"] = {pair.first, pair.second};
      } else {
        const mdim::Edge& a = g.edges()[pair.first];
        const mdim::Edge& b = g.edges()[pair.second];
        entry["collide"] = {{a.u, a.v}, {b.u, b.v}};
      }
      refs.push_back(std::move(entry));
    }
  }
  return j;
}

struct GenOptions {
  std::string family;
  int k = 2;
  int q = 2;
  int n = 3;
  int d = 2;
  int t = -1;
  std::uint64_t seed = 1;
  std::vector<int> lo, hi;
  std::string out;
  std::string dot;
};

int run_gen(const GenOptions& opt) {
  mdim::Graph g{1};
  std::vector<int> landmarks;
  Json extra;
  if (opt.family == "dk-window") {
    mdim::LatticePoint lo = opt.lo.empty() ? mdim::LatticePoint(opt.k, 0) : opt.lo;
    mdim::LatticePoint hi = opt.hi.empty() ? mdim::LatticePoint(opt.k, 2) : opt.hi;
    g = mdim::dk_window(opt.k, lo, hi);
  } else if (opt.family == "ck") {
    mdim::CkGraph ck = mdim::ck_q(opt.k, opt.q);
    g = std::move(ck.g);
    landmarks = std::move(ck.landmarks);
  } else if (opt.family == "mk") {
    g = mdim::mk(opt.k);
  } else if (opt.family == "grid") {
    g = mdim::grid(opt.n, opt.d);
  } else if (opt.family == "hypercube") {
    g = mdim::hypercube(opt.n);
  } else if (opt.family == "knn") {
    mdim::KnnGraph knn = mdim::knn_embedding(opt.k);
    g = std::move(knn.g);
    extra["parts"] = {knn.part0, knn.part1};
  } else if (opt.family == "clique-gadget") {
    const int t = opt.t > 0 ? opt.t : mdim::sidon_default_t(opt.k);
    const mdim::SidonSet set = mdim::sidon_sample(opt.k, t, opt.seed);
    mdim::GadgetGraph gadget = mdim::clique_gadget(opt.k, set);
    g = std::move(gadget.g);
    landmarks = std::move(gadget.landmarks);
    extra["sidon"] = set.members;
    extra["clique_size"] = gadget.clique_size;
  } else if (opt.family == "wheel-host") {
    mdim::WheelHost host = mdim::wheel_host(opt.k);
    g = std::move(host.host);
    landmarks = std::move(host.landmarks);
    extra["hub"] = host.hub;
    extra["cycle"] = host.cycle;
  } else {
    std::cerr << "unknown family: " << opt.family << "\n";
    return 2;
  }

  Json j = mdim::graph_to_json(g, landmarks);
  if (extra.is_object())
    for (auto& [key, value] : extra.items()) j[key] = value;
  const std::string text = j.dump(2) + "\n";
  if (opt.out.empty())
    std::cout << text;
  else
    mdim::save_text(opt.out, text);
  if (!opt.dot.empty()) mdim::save_text(opt.dot, mdim::graph_to_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric dimension toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a graph family");
  cmd_gen->add_option("family", gen.family,
                      "dk-window|ck|mk|grid|hypercube|knn|clique-gadget|wheel-host")
      ->required();
  cmd_gen->add_option("--k", gen.k, "lattice dimension");
  cmd_gen->add_option("--q", gen.q, "cross polytope radius");
  cmd_gen->add_option("--n", gen.n, "path length / hypercube dimension");
  cmd_gen->add_option("--d", gen.d, "grid power");
  cmd_gen->add_option("--t", gen.t, "Sidon sample target size (default floor((8/3)^(k/3)))");
  cmd_gen->add_option("--seed", gen.seed, "sampling seed");
  cmd_gen->add_option("--lo", gen.lo, "window lower corner")->delimiter(',');
  cmd_gen->add_option("--hi", gen.hi, "window upper corner")->delimiter(',');
  cmd_gen->add_option("--out", gen.out, "output path (stdout if omitted)");
  cmd_gen->add_option("--dot", gen.dot, "also write DOT here");

  std::string dim_in;
  bool dim_edge = false, dim_verbose = false;
  int dim_max_k = -1;
  CLI::App* cmd_dim = app.add_subcommand("dim", "compute (edge) metric dimension");
  cmd_dim->add_option("input", dim_in, "graph file (JSON or edge list)")->required();
  cmd_dim->add_flag("--edge", dim_edge, "edge metric dimension");
  cmd_dim->add_option("--max-k", dim_max_k, "landmark cap (default n-1)");
  cmd_dim->add_flag("--verbose", dim_verbose, "record a counterexample per refuted subset");

  std::string verify_in;
  bool verify_edge = false;
  std::vector<int> verify_set;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a landmark set");
  cmd_verify->add_option("input", verify_in, "graph file")->required();
  cmd_verify->add_option("--set", verify_set, "landmark ids (falls back to the file's landmarks)")
      ->delimiter(',');
  cmd_verify->add_flag("--edge", verify_edge, "check edge resolving");

  std::string report_in;
  int report_cap = 20;
  CLI::App* cmd_report = app.add_subcommand("report", "invariant report");
  cmd_report->add_option("input", report_in, "graph file")->required();
  cmd_report->add_option("--cap", report_cap, "exact chromatic/clique size cap");

  mdim::SuiteCaps caps;
  int jobs = 1;
  std::string report_path;
  CLI::App* cmd_suite = app.add_subcommand("suite", "run the paper-claims suite");
  cmd_suite->add_option("--k-max", caps.k_max, "lattice dimension cap");
  cmd_suite->add_option("--q-max", caps.q_max, "radius cap");
  cmd_suite->add_option("--n-max", caps.n_max, "order cap for grids and random graphs");
  cmd_suite->add_option("--seed", caps.seed, "master seed");
  cmd_suite->add_option("--jobs", jobs, "worker threads");
  cmd_suite->add_option("--report", report_path, "write the JSON report here");

  std::string dot_in, dot_out;
  CLI::App* cmd_dot = app.add_subcommand("export-dot", "write a DOT rendering");
  cmd_dot->add_option("input", dot_in, "graph file")->required();
  cmd_dot->add_option("--out", dot_out, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);

    if (cmd_dim->parsed()) {
      const mdim::LoadedGraph in = mdim::load_graph(dim_in);
      mdim::SolveOptions opts;
      opts.max_k = dim_max_k;
      opts.verbose = dim_verbose;
      const mdim::Certificate cert = dim_edge ? mdim::edge_metric_dimension(in.g, opts)
                                              : mdim::metric_dimension(in.g, opts);
      std::cout << certificate_to_json(cert, in.g, dim_verbose).dump(2) << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      const mdim::LoadedGraph in = mdim::load_graph(verify_in);
      const std::vector<int>& set = verify_set.empty() ? in.landmarks : verify_set;
      if (set.empty()) {
        std::cerr << "no landmark set: pass --set or use a file with landmarks\n";
        return 2;
      }
      for (int v : set)
        if (v < 0 || v >= in.g.vertex_count()) {
          std::cerr << "landmark id " << v << " out of range\n";
          return 2;
        }
      const mdim::DistanceTable dt = mdim::all_pairs_distances(in.g);
      if (verify_edge) {
        const mdim::EdgeResolveCheck chk = mdim::is_edge_resolving(dt, in.g.edges(), set);
        if (chk.resolving) {
          std::cout << "pass: set is edge resolving\n";
          return 0;
        }
        const auto& [a, b] = *chk.counterexample;
        std::cout << "fail: edges " << a.u << "-" << a.v << " and " << b.u << "-" << b.v
                  << " have equal distance vectors\n";
        return 1;
      }
      const mdim::ResolveCheck chk = mdim::is_resolving(dt, set);
      if (chk.resolving) {
        std::cout << "pass: set is resolving\n";
        return 0;
      }
      std::cout << "fail: vertices " << chk.counterexample->first << " and "
                << chk.counterexample->second << " have equal distance vectors\n";
      return 1;
    }

    if (cmd_report->parsed()) {
      const mdim::LoadedGraph in = mdim::load_graph(report_in);
      const mdim::InvariantReport r = mdim::invariant_report(in.g, report_cap);
      Json j;
      j["order"] = r.order;
      j["size"] = r.size;
      j["max_degree"] = r.max_degree;
      j["min_degree"] = r.min_degree;
      j["degeneracy"] = r.degeneracy;
      j["clique_number"] = r.clique_number ? Json(*r.clique_number) : Json("unavailable");
      j["chromatic_number"] = r.chromatic_number ? Json(*r.chromatic_number) : Json("unavailable");
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_suite->parsed()) {
      const mdim::SuiteReport report = mdim::run_suite(caps, jobs);
      for (const mdim::ExperimentResult& r : report.results) {
        std::printf("%s %-40s %s %s %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.computed.c_str(), r.relation.c_str(), r.expected.c_str(),
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
      }
      std::printf("%zu claims, %zu failed\n", report.results.size(),
                  static_cast<std::size_t>(
                      std::count_if(report.results.begin(), report.results.end(),
                                    [](const mdim::ExperimentResult& r) { return !r.pass; })));
      if (!report_path.empty())
        mdim::save_text(report_path, mdim::suite_report_json(report).dump(2) + "\n");
      return report.all_pass ? 0 : 1;
    }

    if (cmd_dot->parsed()) {
      const mdim::LoadedGraph in = mdim::load_graph(dot_in);
      const std::string dot = mdim::graph_to_dot(in.g);
      if (dot_out.empty())
        std::cout << dot;
      else
        mdim::save_text(dot_out, dot);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
