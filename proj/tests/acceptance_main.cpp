// Acceptance gate: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "otpart/suites.hpp"

using namespace otpart;

namespace {

int failures_total = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(int index, const std::string& label, bool pass, long long checks,
            long long failed, double elapsed,
            const std::vector<std::string>& witnesses = {}) {
  std::printf("criterion %02d %s %s (checks=%lld failures=%lld %.1fs)\n", index,
              pass ? "PASS" : "FAIL", label.c_str(), checks, failed, elapsed);
  for (const auto& w : witnesses) std::printf("    %s\n", w.c_str());
  if (!pass) ++failures_total;
}

void run_suite_criterion(int index, const std::string& label,
                         const SuiteResult& r, double budget_s,
                         double elapsed) {
  std::vector<std::string> witnesses;
  if (r.failures > 0) {
    for (const auto& row : r.rows) {
      if (row.empty() || row.back() != "0") continue;
      std::string line = r.name + ":";
      for (const auto& cell : row) line += " " + cell;
      witnesses.push_back(line);
      if (witnesses.size() >= 4) break;
    }
  }
  const bool in_budget = budget_s <= 0 || elapsed < budget_s;
  if (!in_budget)
    witnesses.push_back("runtime " + std::to_string(elapsed) +
                        "s exceeded the budget of " +
                        std::to_string(budget_s) + "s");
  report(index, label, r.failures == 0 && in_budget, r.checks, r.failures,
         elapsed, witnesses);
}

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 12345;

  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_counts(40, 12);
    run_suite_criterion(1, "partition counts vs generating functions", r, 30.0,
                        seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_solver_oracle(7, 100, 6, kSeed);
    run_suite_criterion(2, "solver equals the exhaustive oracle", r, 120.0,
                        seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_kantorovich(7, 100, 6, kSeed);
    run_suite_criterion(3, "Kantorovich agrees with Monge, zero duality gap",
                        r, 0.0, seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_reflection(10);
    run_suite_criterion(4, "reflection map optimality and self-symmetry", r,
                        60.0, seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_ccyclic(6);
    run_suite_criterion(5, "cyclic monotonicity characterizes optimality", r,
                        0.0, seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_idonspt(6);
    run_suite_criterion(6, "optimal maps can fix the support intersection", r,
                        0.0, seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto bij = suite_euler_bijection(40);
    const auto cost = suite_euler_cost(20);
    SuiteResult merged;
    merged.name = "euler";
    merged.checks = bij.checks + cost.checks;
    merged.failures = bij.failures + cost.failures;
    for (const auto& row : bij.rows) merged.rows.push_back(row);
    for (const auto& row : cost.rows) merged.rows.push_back(row);
    run_suite_criterion(7, "Euler bijection and the constructed cost", merged,
                        60.0, seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto odd = suite_allodd(12);
    const auto distinct = suite_alldistinct(12, 8);
    SuiteResult merged;
    merged.name = "characterizations";
    merged.checks = odd.checks + distinct.checks;
    merged.failures = odd.failures + distinct.failures;
    for (const auto& row : odd.rows) merged.rows.push_back(row);
    for (const auto& row : distinct.rows) merged.rows.push_back(row);
    run_suite_criterion(8, "odd/distinct three-way equivalences", merged, 0.0,
                        seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_metric(6);
    run_suite_criterion(9, "partition distance satisfies the metric axioms", r,
                        0.0, seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto r = suite_projections(8);
    run_suite_criterion(10, "projection family reconstruction", r, 0.0,
                        seconds_since(t));
  }
  {
    const auto t = std::chrono::steady_clock::now();
    const auto costs = std::vector<CostFunction>{CostFunction::euclidean(),
                                                 CostFunction::l1()};
    const auto first = suite_conjecture(6, 2, costs);
    const auto second = suite_conjecture(6, 2, costs);
    std::ostringstream sa, sb;
    first.write_csv(sa);
    second.write_csv(sb);
    const bool deterministic = sa.str() == sb.str();
    std::vector<std::string> witnesses;
    for (const auto& p : first.params) witnesses.push_back(p);
    report(11, "sigma-symmetry conjecture scan completes deterministically",
           deterministic && first.checks > 0, first.checks, first.failures,
           seconds_since(t), witnesses);
  }

  if (failures_total > 0)
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures_total);
  else
    std::printf("ACCEPTANCE: all criteria passed\n");
  return failures_total == 0 ? 0 : 1;
}
