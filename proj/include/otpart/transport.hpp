#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otpart/cost.hpp"
#include "otpart/measure.hpp"
#include "otpart/mpartition.hpp"
#include "otpart/partition.hpp"
#include "otpart/plan.hpp"

namespace otpart {

/// Minimum-cost bijection between two all-unit-mass measures of equal
/// support cardinality, by shortest-augmenting-path matching on the
/// dense cost matrix (exact over rationals for exact-capable costs).
/// Throws std::invalid_argument when no transport map need exist
/// (unequal cardinalities or fractional masses); use solve_kantorovich
/// for those inputs.
TransportPlan solve_monge(const DiscreteMeasure& mu_minus,
                          const DiscreteMeasure& mu_plus,
                          const CostFunction& c);

struct BruteForceResult {
  TransportPlan best;
  /// Every optimal bijection (ties within the exact/1e-9 regime).
  std::vector<std::vector<int>> optimal_matchings;
};

/// Exhaustive n! oracle. Refuses n above the cap (default 8).
BruteForceResult brute_force_monge(const DiscreteMeasure& mu_minus,
                                   const DiscreteMeasure& mu_plus,
                                   const CostFunction& c,
                                   std::size_t n_cap = 8);

struct KantorovichSolution {
  TransportPlan plan;  // coupling mode
  DualPotentials duals;
};

/// Exact optimal coupling between measures of equal rational total
/// mass, with feasible dual potentials whose objective equals the
/// primal cost (exactly for exact-capable costs).
KantorovichSolution solve_kantorovich(const DiscreteMeasure& mu_minus,
                                      const DiscreteMeasure& mu_plus,
                                      const CostFunction& c);

struct CycleViolation {
  std::vector<int> subset;  // indices into the plan's pair list
  std::vector<int> sigma;   // sigma[t] = position whose x replaces pair subset[t]'s
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CyclicCheckResult {
  bool monotone = true;
  std::optional<CycleViolation> violation;
  long long permutations_checked = 0;
};

enum class CycleMode {
  /// Cycles only. Complete at a given size: any permutation splits into
  /// disjoint cycles and the defining inequality sums over them.
  Cyclic,
  /// Every permutation of every subset (the literal definition).
  AllPermutations
};

/// Tests sum c(x_i, y_i) <= sum c(x_sigma(i), y_i) over all subsets of
/// graph(plan) of size <= max_cycle. With max_cycle = n the check is
/// exhaustive. Matching plans only.
CyclicCheckResult check_c_cyclic_monotone(const TransportPlan& plan,
                                          const CostFunction& c,
                                          int max_cycle,
                                          CycleMode mode = CycleMode::Cyclic);

/// dist(p-, p+) = optimal matching cost between the delta_center
/// representations. Requires a metric-like cost; a metric on P_m(n).
double partition_distance(const Partition& p_minus, const Partition& p_plus,
                          const CostFunction& c);
double partition_distance(const MPartition& p_minus, const MPartition& p_plus,
                          const CostFunction& c);

struct IntersectionReport {
  std::size_t fixed_points = 0;
  double constrained_cost = 0.0;
  double unconstrained_cost = 0.0;
  bool equal = false;
};

/// Confirms an optimal matching exists that fixes every common support
/// point: solve constrained to fix the intersection, compare with the
/// unconstrained optimum.
IntersectionReport verify_identity_on_intersection(const Partition& p_minus,
                                                   const Partition& p_plus,
                                                   const CostFunction& c);
IntersectionReport verify_identity_on_intersection(const MPartition& p_minus,
                                                   const MPartition& p_plus,
                                                   const CostFunction& c);

struct ReflectionReport {
  double constructed_cost = 0.0;
  double optimal_cost = 0.0;
  bool equal = false;
  bool self_symmetric = false;
  bool zero_cost = false;  // exact: support equality
  bool biconditional_ok = false;
  bool cyclic_certified = false;
};

/// Builds the map that is the identity on the common support of
/// delta_center(p) and delta_center(sym(p)) and the x=y reflection
/// elsewhere, under euclidean cost; asserts it attains the optimum and
/// certifies it by the cyclic-monotonicity check (full exhaustion for
/// n <= 6, cycle length 3 above).
ReflectionReport verify_reflection_optimal(const Partition& p);

struct SigmaScanRow {
  long long n = 0;
  std::string partition;  // format_mpartition
  std::string sigma;      // one-line notation, e.g. "231"
  std::string cost_name;
  bool rejected = false;        // sigma_symmetric failed validation
  bool patched_bijective = false;
  double patched_cost = 0.0;    // Id-on-intersection + T_sigma elsewhere
  double plain_cost = 0.0;      // T_sigma everywhere
  double optimal_cost = 0.0;
  bool patched_optimal = false;
  bool plain_optimal = false;
  bool self_symmetric = false;
  bool zero_cost = false;       // exact support equality
  bool biconditional_ok = false;
};

/// Evidence scan for the sigma-symmetry conjecture over every
/// pi in P_m(n) and sigma in Perm(m+1); never a proof claim.
std::vector<SigmaScanRow> scan_sigma_conjecture(
    long long n, int m, const std::vector<CostFunction>& costs);

}  // namespace otpart
