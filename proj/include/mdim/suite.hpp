#pragma once

// The paper-claims experiment registry. Every acceptance criterion is a
// family of claim instances gated by the caps; the CLI `suite` subcommand
// and the acceptance runner both execute this list. Instance ids are stable
// strings and the report is ordered by them, so output is deterministic no
// matter how many worker threads run the claims.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "mdim/bounds.hpp"
#include "mdim/constructions.hpp"
#include "mdim/extremal.hpp"
#include "mdim/graph.hpp"
#include "mdim/reference.hpp"
#include "mdim/rng.hpp"
#include "mdim/sidon.hpp"
#include "mdim/solver.hpp"

namespace mdim {

struct SuiteCaps {
  int k_max = 3;
  int q_max = 4;
  int n_max = 9;
  std::uint64_t seed = 1;
};

struct ExperimentResult {
  std::string id;
  std::string params;
  std::string relation;  // "=", ">=", "<="
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string detail;
};

namespace suite_detail {

inline void conclude_eq(ExperimentResult& r, long long expected, long long computed) {
  r.relation = "=";
  r.expected = std::to_string(expected);
  r.computed = std::to_string(computed);
  r.pass = expected == computed;
}

inline void conclude_ge(ExperimentResult& r, long long computed, long long floor_value) {
  r.relation = ">=";
  r.expected = std::to_string(floor_value);
  r.computed = std::to_string(computed);
  r.pass = computed >= floor_value;
}

inline void conclude_le(ExperimentResult& r, long long computed, long long ceiling_value) {
  r.relation = "<=";
  r.expected = std::to_string(ceiling_value);
  r.computed = std::to_string(computed);
  r.pass = computed <= ceiling_value;
}

inline void conclude_true(ExperimentResult& r, bool ok, const std::string& failure_detail = "") {
  r.relation = "=";
  r.expected = "true";
  r.computed = ok ? "true" : "false";
  r.pass = ok;
  if (!ok && r.detail.empty()) r.detail = failure_detail;
}

inline long long pow3(int k) {
  long long v = 1;
  while (k-- > 0) v *= 3;
  return v;
}

inline std::string join_ids(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

struct GadgetPick {
  int k;
  int t;
  std::uint64_t seeds[3];
};

// Instance parameters for criterion 11. The target size t is chosen large
// enough that the sampled strings cover both digit values in every position
// (otherwise some attachment vertex is isolated and the gadget is
// disconnected, which the dimension solvers reject); the seeds are fixed
// ones for which that holds after repair.
inline const GadgetPick* gadget_picks() {
  static const GadgetPick picks[] = {
      {2, 3, {1, 2, 3}},
      {3, 5, {1, 2, 3}},
      {4, 6, {1, 2, 3}},
  };
  return picks;
}

}  // namespace suite_detail

struct SuiteInstance {
  std::string id;
  std::string params;
  std::function<void(ExperimentResult&)> run;
};

inline const char* criterion_title(int number) {
  switch (number) {
    case 1: return "C_k(q) landmarks resolve; distance vectors equal coordinates";
    case 2: return "interior vertex of dk_window(k,[0,2]^k) has degree 3^k-1";
    case 3: return "wheel_cycle invariants hold; k=2 matches the explicit 8-cycle";
    case 4: return "knn_embedding contains K_{2^(k-1),2^(k-1)}; wheel host resolves with k landmarks";
    case 5: return "degeneracy of dk_window(2,[0,2q]^2) is 4; (3^k-1)/2 upper bound on D_k subgraphs";
    case 6: return "parity coloring proper with <= 2^k colors; chromatic number of the {0,1}^k graph is 2^k";
    case 7: return "dim(P_n^2) = edim(P_n^2) = 2 for n in 2..6; dim(P_9^3) = 3";
    case 8: return "bound calculators match pinned values and the independent oracles";
    case 9: return "M_2: dominant vertex bound 4, exact edim >= 4, dim = 2";
    case 10: return "C_2(q): exact edim >= q-1 while dim = 2";
    case 11: return "Sidon samples pass the brute-force oracle; gadget landmarks separate edges; edim <= 2k";
    case 12: return "exact solver matches the naive all-subsets oracle on random graphs";
  }
  return "";
}

inline std::vector<SuiteInstance> build_suite(const SuiteCaps& caps) {
  using namespace suite_detail;
  std::vector<SuiteInstance> out;
  auto add = [&out](std::string id, std::string params,
                    std::function<void(ExperimentResult&)> run) {
    out.push_back({std::move(id), std::move(params), std::move(run)});
  };

  // 1. C_k(q) resolving and coordinate distance vectors.
  for (int k = 2; k <= std::min(3, caps.k_max); ++k)
    for (int q = 1; q <= std::min(4, caps.q_max); ++q)
      add("01.ck-resolving/k=" + std::to_string(k) + ",q=" + std::to_string(q),
          "k=" + std::to_string(k) + " q=" + std::to_string(q), [k, q](ExperimentResult& r) {
            const CkGraph ck = ck_q(k, q);
            const DistanceTable dt = all_pairs_distances(ck.g);
            for (int v = 0; v < ck.g.vertex_count(); ++v)
              if (distance_vector(dt, v, ck.landmarks) != ck.g.label(v)) {
                conclude_true(r, false,
                              "distance vector of " + point_to_string(ck.g.label(v)) +
                                  " differs from its coordinates");
                return;
              }
            const ResolveCheck chk = is_resolving(dt, ck.landmarks);
            conclude_true(r, chk.resolving, "landmark set not resolving");
          });

  // 2. Maximum degree of the [0,2]^k window.
  for (int k = 1; k <= std::min(3, caps.k_max); ++k)
    add("02.max-degree/k=" + std::to_string(k), "k=" + std::to_string(k),
        [k](ExperimentResult& r) {
          const Graph g = dk_window(k, LatticePoint(k, 0), LatticePoint(k, 2));
          const int center = g.label_index().at(LatticePoint(k, 1));
          conclude_eq(r, pow3(k) - 1, g.degree(center));
        });

  // 3. Wheel Hamiltonian cycle.
  for (int k = 2; k <= std::min(4, caps.k_max); ++k)
    add("03.wheel/k=" + std::to_string(k), "k=" + std::to_string(k), [k](ExperimentResult& r) {
      const HamiltonianCycle cyc = wheel_cycle(k);
      const std::string err = check_wheel_cycle(cyc);
      if (!err.empty()) {
        conclude_true(r, false, err);
        return;
      }
      if (k == 2) {
        const std::vector<LatticePoint> base = {{0, 0}, {0, 1}, {0, 2}, {1, 2},
                                                {2, 2}, {2, 1}, {2, 0}, {1, 0}};
        if (cyc.order != base) {
          conclude_true(r, false, "k=2 cycle differs from the paper's 8-cycle");
          return;
        }
      }
      conclude_true(r, true);
    });

  // 4. K_{n,n} inside {0,1}^k and the wheel host's dimension.
  for (int k = 1; k <= std::min(4, caps.k_max); ++k)
    add("04.knn/k=" + std::to_string(k), "k=" + std::to_string(k), [k](ExperimentResult& r) {
      const KnnGraph knn = knn_embedding(k);
      const long long half = 1LL << (k - 1);
      if (static_cast<long long>(knn.part0.size()) != half ||
          static_cast<long long>(knn.part1.size()) != half) {
        conclude_true(r, false, "parts are not both of size 2^(k-1)");
        return;
      }
      for (int u : knn.part0)
        for (int v : knn.part1)
          if (!knn.g.has_edge(u, v)) {
            conclude_true(r, false,
                          "missing cross edge " + std::to_string(u) + "-" + std::to_string(v));
            return;
          }
      conclude_true(r, true);
    });
  for (int k = 2; k <= std::min(3, caps.k_max); ++k)
    add("04.wheel-host/k=" + std::to_string(k), "k=" + std::to_string(k),
        [k](ExperimentResult& r) {
          const WheelHost host = wheel_host(k);  // throws if the wheel is not inside
          const DistanceTable dt = all_pairs_distances(host.host);
          const ResolveCheck chk = is_resolving(dt, host.landmarks);
          r.detail = "host order " + std::to_string(host.host.vertex_count()) + ", rim " +
                     std::to_string(host.cycle.size());
          conclude_true(r, chk.resolving, "host landmarks not resolving");
        });

  // 5. Degeneracy.
  if (caps.k_max >= 2)
    for (int q = 2; q <= std::min(3, caps.q_max); ++q)
      add("05.degeneracy-window/q=" + std::to_string(q), "k=2 q=" + std::to_string(q),
          [q](ExperimentResult& r) {
            const Graph g = dk_window(2, LatticePoint(2, 0), LatticePoint(2, 2 * q));
            conclude_eq(r, 4, degeneracy(g).value);
          });
  for (int k = 2; k <= std::min(3, caps.k_max); ++k)
    add("05.degeneracy-upper/k=" + std::to_string(k), "k=" + std::to_string(k),
        [k, caps](ExperimentResult& r) {
          const long long limit = (pow3(k) - 1) / 2;
          long long worst = 0;
          std::string worst_name = "none";
          auto consider = [&](const Graph& g, const std::string& name) {
            const long long val = degeneracy(g).value;
            if (val > worst) {
              worst = val;
              worst_name = name;
            }
          };
          consider(dk_window(k, LatticePoint(k, 0), LatticePoint(k, 2)), "window[0,2]^k");
          for (int q = 1; q <= caps.q_max; ++q)
            consider(ck_q(k, q).g, "ck q=" + std::to_string(q));
          r.detail = "largest degeneracy " + std::to_string(worst) + " on " + worst_name;
          conclude_le(r, worst, limit);
        });

  // 6. Parity coloring and the chromatic number of the {0,1}^k clique.
  {
    struct Labeled {
      std::string name;
      int k;
      std::function<Graph()> make;
    };
    std::vector<Labeled> families;
    for (int k = 1; k <= std::min(3, caps.k_max); ++k) {
      families.push_back({"dk-k" + std::to_string(k), k, [k] {
                            return dk_window(k, LatticePoint(k, 0), LatticePoint(k, 2));
                          }});
      if (k >= 2) {
        families.push_back({"ck-k" + std::to_string(k), k, [k] { return ck_q(k, 2).g; }});
        families.push_back({"mk-k" + std::to_string(k), k, [k] { return mk(k); }});
      }
    }
    families.push_back({"grid-3-2", 2, [] { return grid(3, 2); }});
    families.push_back({"hypercube-3", 3, [] { return hypercube(3); }});
    for (const auto& fam : families)
      add("06.parity/" + fam.name, fam.name, [fam](ExperimentResult& r) {
        const Graph g = fam.make();  // parity_coloring throws if not proper
        const ParityColoring col = parity_coloring(g);
        r.detail = std::to_string(col.color_count) + " colors";
        conclude_le(r, col.color_count, 1LL << fam.k);
      });
  }
  for (int k = 1; k <= std::min(2, caps.k_max); ++k)
    add("06.chromatic-knn/k=" + std::to_string(k), "k=" + std::to_string(k),
        [k](ExperimentResult& r) {
          const auto chi = chromatic_number_exact(knn_embedding(k).g);
          conclude_eq(r, 1LL << k, chi ? *chi : -1);
        });

  // 7. Grid dimensions.
  for (int n = 2; n <= std::min(6, caps.n_max); ++n)
    add("07.grid2d/n=" + std::to_string(n), "n=" + std::to_string(n) + " d=2",
        [n](ExperimentResult& r) {
          const Graph g = grid(n, 2);
          const Certificate dim = metric_dimension(g);
          const Certificate edim = edge_metric_dimension(g);
          r.detail = "dim " + std::to_string(dim.value) + ", edim " + std::to_string(edim.value);
          conclude_true(r, dim.value == 2 && edim.value == 2,
                        "expected both dimensions equal to 2");
        });
  if (caps.n_max >= 9)
    add("07.grid3d/n=9", "n=9 d=3", [](ExperimentResult& r) {
      const Graph g = grid(9, 3);
      const Certificate cert = metric_dimension(g);
      r.detail = "witness " + join_ids(cert.witness) +
                 (cert.exhausted ? ", all smaller subsets refuted" : "");
      conclude_eq(r, 3, cert.value);
    });

  // 8. Bound calculators against pinned values and the pre-built oracles.
  add("08.bounds/edge-edim", "m=12 D=4", [](ExperimentResult& r) {
    const int got = edge_bound_edim(12, 4).bound;
    conclude_true(r, got == 2 && got == reference::oracle_edge_bound_edim(12, 4),
                  "got " + std::to_string(got));
  });
  add("08.bounds/grid-dim", "n=9 d=3", [](ExperimentResult& r) {
    const int got = grid_dim_lower_bound(9, 3).bound;
    conclude_true(r, got == 3 && got == reference::oracle_grid_dim_lower_bound(9, 3),
                  "got " + std::to_string(got));
  });
  add("08.bounds/grid-edim", "n=5 d=2", [](ExperimentResult& r) {
    const int got = grid_edim_lower_bound(5, 2).bound;
    conclude_true(r, got == 2 && got == reference::oracle_grid_edim_lower_bound(5, 2),
                  "got " + std::to_string(got));
  });
  add("08.bounds/hypercube", "k=2", [](ExperimentResult& r) {
    const int got = hypercube_dim_order_bound(2);
    conclude_true(r, got == 5 && got == reference::oracle_hypercube_dim_order_bound(2),
                  "got " + std::to_string(got));
  });
  add("08.bounds/order-dim", "n=729 D=24", [](ExperimentResult& r) {
    const int got = order_bound_dim(729, 24).bound;
    conclude_true(r, got == 3 && got == reference::oracle_order_bound_dim(729, 24),
                  "got " + std::to_string(got));
  });

  // 9. The M_2 instance of the dominant-vertex lemma.
  if (caps.k_max >= 2) {
    add("09.mk/dim", "k=2", [](ExperimentResult& r) {
      conclude_eq(r, 2, metric_dimension(mk(2)).value);
    });
    add("09.mk/edim-lower", "k=2", [](ExperimentResult& r) {
      conclude_ge(r, edge_metric_dimension(mk(2)).value, 4);
    });
    add("09.mk/lemma-bound", "k=2", [](ExperimentResult& r) {
      conclude_eq(r, 4, dominant_vertex_edim_bound(mk(2)).bound);
    });
  }

  // 10. Unbounded edim on C_2(q).
  if (caps.k_max >= 2)
    for (int q = 2; q <= std::min(5, caps.q_max); ++q) {
      add("10.c2q-dim/q=" + std::to_string(q), "q=" + std::to_string(q),
          [q](ExperimentResult& r) { conclude_eq(r, 2, metric_dimension(ck_q(2, q).g).value); });
      add("10.c2q-edim/q=" + std::to_string(q), "q=" + std::to_string(q),
          [q](ExperimentResult& r) {
            // Refuting every subset of size q-2 certifies edim >= q-1; the
            // exact value grows fast enough that computing it at q=5 would
            // blow the time budget.
            const Certificate cert = edge_metric_dimension(ck_q(2, q).g, q - 2);
            r.detail = cert.complete ? "witness " + join_ids(cert.witness)
                                     : "all subsets of size <= " + std::to_string(q - 2) +
                                           " refuted";
            conclude_ge(r, cert.value, q - 1);
          });
    }

  // 11. Sidon sampling and the clique gadget.
  for (int pick_i = 0; pick_i < 3; ++pick_i) {
    const suite_detail::GadgetPick& pick = gadget_picks()[pick_i];
    if (pick.k > caps.k_max) continue;
    for (int s = 0; s < 3; ++s) {
      const std::uint64_t seed = pick.seeds[s];
      const int k = pick.k, t = pick.t;
      const std::string suffix = "/k=" + std::to_string(k) + ",seed=" + std::to_string(seed);
      const std::string params =
          "k=" + std::to_string(k) + " t=" + std::to_string(t) + " seed=" + std::to_string(seed);
      add("11.gadget-edim" + suffix, params, [k, t, seed](ExperimentResult& r) {
        const GadgetGraph gadget = clique_gadget(k, sidon_sample(k, t, seed));
        const Certificate cert = edge_metric_dimension(gadget.g);
        r.detail = "|U| " + std::to_string(gadget.clique_size) + ", witness " +
                   join_ids(cert.witness);
        conclude_le(r, cert.value, 2 * k);
      });
      add("11.gadget-landmarks" + suffix, params, [k, t, seed](ExperimentResult& r) {
        const GadgetGraph gadget = clique_gadget(k, sidon_sample(k, t, seed));
        const DistanceTable dt = all_pairs_distances(gadget.g);
        const EdgeResolveCheck chk = is_edge_resolving(dt, gadget.g.edges(), gadget.landmarks);
        std::string detail;
        if (!chk.resolving) {
          const Edge& a = chk.counterexample->first;
          const Edge& b = chk.counterexample->second;
          detail = "edges " + std::to_string(a.u) + "-" + std::to_string(a.v) + " and " +
                   std::to_string(b.u) + "-" + std::to_string(b.v) + " collide";
        }
        conclude_true(r, chk.resolving, detail);
      });
      add("11.sidon" + suffix, params, [k, t, seed](ExperimentResult& r) {
        const SidonSet set = sidon_sample(k, t, seed);
        std::vector<std::vector<int>> digits;
        for (const std::string& m : set.members) {
          std::vector<int> row;
          for (char c : m) row.push_back(c - '0');
          digits.push_back(std::move(row));
        }
        r.detail = "|U| " + std::to_string(set.members.size()) + " of t=" + std::to_string(t);
        conclude_true(r, reference::brute_force_sidon_check(digits),
                      "brute-force collision found");
      });
    }
  }

  // 12. Exact solver against the naive oracle on random connected graphs.
  if (caps.n_max >= 4)
    for (int batch = 0; batch < 10; ++batch) {
      char id[32];
      std::snprintf(id, sizeof id, "12.oracle/batch=%02d", batch);
      add(id, "graphs 20, n <= " + std::to_string(std::min(9, caps.n_max)),
          [batch, caps](ExperimentResult& r) {
            const int n_hi = std::min(9, caps.n_max);
            for (int i = batch * 20; i < batch * 20 + 20; ++i) {
              auto rng = make_rng(derive_seed(caps.seed, "suite/oracle/" + std::to_string(i)));
              const int n = 4 + static_cast<int>(bounded_rand(rng, n_hi - 3));
              const Graph g = reference::random_connected_graph(n, 0.25, rng);
              const auto [dim_naive, dim_witness] = reference::naive_metric_dimension(g);
              const auto [edim_naive, edim_witness] = reference::naive_edge_metric_dimension(g);
              const int dim = metric_dimension(g).value;
              const int edim = edge_metric_dimension(g).value;
              if (dim != dim_naive || edim != edim_naive) {
                conclude_true(r, false,
                              "graph " + std::to_string(i) + ": solver " + std::to_string(dim) +
                                  "/" + std::to_string(edim) + ", oracle " +
                                  std::to_string(dim_naive) + "/" + std::to_string(edim_naive));
                return;
              }
            }
            conclude_true(r, true);
          });
    }

  std::stable_sort(out.begin(), out.end(),
                   [](const SuiteInstance& a, const SuiteInstance& b) { return a.id < b.id; });
  return out;
}

struct SuiteReport {
  SuiteCaps caps;
  std::vector<ExperimentResult> results;
  bool all_pass = true;
};

inline SuiteReport run_suite(const SuiteCaps& caps, int jobs = 1) {
  const std::vector<SuiteInstance> instances = build_suite(caps);
  SuiteReport report;
  report.caps = caps;
  report.results.resize(instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      ExperimentResult& r = report.results[i];
      r.id = instances[i].id;
      r.params = instances[i].params;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        instances[i].run(r);
      } catch (const std::exception& e) {
        r.pass = false;
        r.relation = "=";
        r.expected = "true";
        r.computed = "error";
        r.detail = e.what();
      }
      r.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const ExperimentResult& r : report.results)
    if (!r.pass) report.all_pass = false;
  return report;
}

inline nlohmann::ordered_json suite_report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = "paper-claims";
  j["caps"] = {{"k_max", report.caps.k_max},
               {"q_max", report.caps.q_max},
               {"n_max", report.caps.n_max},
               {"seed", report.caps.seed}};
  auto& results = j["results"] = nlohmann::ordered_json::array();
  for (const ExperimentResult& r : report.results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["params"] = r.params;
    e["relation"] = r.relation;
    e["expected"] = r.expected;
    e["computed"] = r.computed;
    e["pass"] = r.pass;
    e["elapsed_ms"] = r.elapsed_ms;
    if (!r.detail.empty()) e["detail"] = r.detail;
    results.push_back(std::move(e));
  }
  j["pass"] = report.all_pass;
  return j;
}

}  // namespace mdim
