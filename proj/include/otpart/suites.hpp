#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "otpart/cost.hpp"

namespace otpart {

/// One desk-scale verification run: a CSV-shaped table plus a failure
/// count. Rows are assembled in a deterministic order, so identical
/// configurations produce byte-identical output.
struct SuiteResult {
  std::string name;
  std::vector<std::string> params;  // "key=value" echoed into the header
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  long long failures = 0;
  long long checks = 0;

  std::string summary() const;
  void write_csv(std::ostream& os) const;
};

SuiteResult suite_counts(long long n_max_1d, long long n_max_2d);
SuiteResult suite_solver_oracle(long long n_max, int m2_samples,
                                long long m2_n_max, std::uint64_t seed);
SuiteResult suite_kantorovich(long long n_max, int m2_samples,
                              long long m2_n_max, std::uint64_t seed);
SuiteResult suite_idonspt(long long n_max);
SuiteResult suite_reflection(long long n_max);
SuiteResult suite_ccyclic(long long n_max);
SuiteResult suite_metric(long long n_max);
SuiteResult suite_allodd(long long n_max);
SuiteResult suite_alldistinct(long long n_max, int k_cap = 8);
SuiteResult suite_euler_bijection(long long n_max);
SuiteResult suite_euler_cost(long long n_max);
SuiteResult suite_projections(long long n_max);
SuiteResult suite_conjecture(long long n_max, int m,
                             const std::vector<CostFunction>& costs);

/// Dispatch by CLI suite name; throws std::invalid_argument on an
/// unknown name. Names: idonspt, reflection, ccyclic, metric, allodd,
/// alldistinct, euler_bijection, euler_cost, projections.
SuiteResult run_named_suite(const std::string& name, long long n_max,
                            std::uint64_t seed);

}  // namespace otpart
