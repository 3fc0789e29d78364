// Acceptance gate: runs the full claim suite at the paper's parameters and
// prints one verdict line per criterion. A criterion fails when any of its
// claims fails or when its wall-time budget is exceeded.

#include "mdim/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <thread>

namespace {

// Serial-time budgets in milliseconds; criteria without an entry are
// unbounded.
const std::map<int, double>& budgets() {
  static const std::map<int, double> table = {
      {1, 1000.0},  {4, 5000.0},   {7, 600000.0},  {9, 30000.0},
      {10, 300000.0}, {11, 120000.0}, {12, 120000.0},
  };
  return table;
}

struct CriterionTally {
  int claims = 0;
  int failed = 0;
  double elapsed_ms = 0.0;
  std::vector<const mdim::ExperimentResult*> failures;
};

}  // namespace

int main() {
  mdim::SuiteCaps caps;
  caps.k_max = 4;
  caps.q_max = 5;
  caps.n_max = 9;
  caps.seed = 1;

  const unsigned hw = std::thread::hardware_concurrency();
  const int jobs = hw ? static_cast<int>(hw) : 2;
  const mdim::SuiteReport report = mdim::run_suite(caps, jobs);

  std::map<int, CriterionTally> tally;
  for (const mdim::ExperimentResult& r : report.results) {
    const int criterion = std::atoi(r.id.substr(0, 2).c_str());
    CriterionTally& t = tally[criterion];
    ++t.claims;
    t.elapsed_ms += r.elapsed_ms;
    if (!r.pass) {
      ++t.failed;
      t.failures.push_back(&r);
    }
  }

  int failed_criteria = 0;
  for (int criterion = 1; criterion <= 12; ++criterion) {
    const auto it = tally.find(criterion);
    if (it == tally.end()) {
      ++failed_criteria;
      std::printf("FAIL %2d. %s\n        no claims were registered\n", criterion,
                  mdim::criterion_title(criterion));
      continue;
    }
    const CriterionTally& t = it->second;

    const auto budget = budgets().find(criterion);
    const bool over_budget = budget != budgets().end() && t.elapsed_ms > budget->second;
    const bool ok = t.failed == 0 && !over_budget;
    if (!ok) ++failed_criteria;

    std::printf("%s %2d. %-58s %3d claims %8.0f ms\n", ok ? "PASS" : "FAIL", criterion,
                mdim::criterion_title(criterion), t.claims, t.elapsed_ms);
    if (over_budget)
      std::printf("        exceeded the %.0f ms budget\n", budget->second);
    for (const mdim::ExperimentResult* r : t.failures)
      std::printf("        %s: computed %s, expected %s %s%s%s\n", r->id.c_str(),
                  r->computed.c_str(), r->relation.c_str(), r->expected.c_str(),
                  r->detail.empty() ? "" : "  -- ", r->detail.c_str());
  }

  std::printf("%d of 12 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
