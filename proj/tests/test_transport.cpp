#include <cmath>
#include <numeric>

#include "doctest.h"
#include "otpart/tolerances.hpp"
#include "otpart/transport.hpp"

using namespace otpart;

namespace {

std::vector<CostFunction> all_costs() {
  return {CostFunction::euclidean(), CostFunction::l1(), CostFunction::linf(),
          CostFunction::squared_euclidean()};
}

}  // namespace

TEST_CASE("solver equals the exhaustive oracle on small fixtures") {
  for (long long n = 1; n <= 5; ++n) {
    std::vector<DiscreteMeasure> measures;
    for (const auto& p : enumerate_partitions(n))
      measures.push_back(delta_center(p));
    for (const auto& c : all_costs())
      for (const auto& a : measures)
        for (const auto& b : measures) {
          const TransportPlan fast = solve_monge(a, b, c);
          const BruteForceResult slow = brute_force_monge(a, b, c);
          if (fast.cost_exact)
            CHECK(*fast.cost_exact == *slow.best.cost_exact);
          else
            CHECK(std::abs(fast.cost - slow.best.cost) <= kCostAbsTol);
          // The plan really is a bijection with the reported cost.
          std::vector<char> used(b.size(), 0);
          for (int t : fast.matching) {
            CHECK(!used[static_cast<std::size_t>(t)]);
            used[static_cast<std::size_t>(t)] = 1;
          }
          CHECK(std::abs(matching_cost(a, b, fast.matching, c) - fast.cost) <=
                kCostAbsTol);
        }
  }
}

TEST_CASE("identical measures transport for free") {
  const auto mu = delta_center(Partition({3, 2, 1}));
  for (const auto& c : all_costs()) {
    const TransportPlan plan = solve_monge(mu, mu, c);
    CHECK(plan.cost == doctest::Approx(0.0));
    if (plan.cost_exact) CHECK(*plan.cost_exact == Rational(0));
  }
}

TEST_CASE("conjugate pair distances") {
  // (2,1) is self-conjugate: zero distance to its conjugate.
  CHECK(partition_distance(Partition({2, 1}), conjugate(Partition({2, 1})),
                           CostFunction::euclidean()) == doctest::Approx(0.0));
  // (2,1,1) and (3,1) are conjugate but distinct; the exhaustive oracle
  // gives 2*sqrt(2) under euclidean cost.
  const double d = partition_distance(Partition({2, 1, 1}), Partition({3, 1}),
                                      CostFunction::euclidean());
  CHECK(d == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  const auto brute =
      brute_force_monge(delta_center(Partition({2, 1, 1})),
                        delta_center(Partition({3, 1})), CostFunction::euclidean());
  CHECK(d == doctest::Approx(brute.best.cost).epsilon(1e-12));
}

TEST_CASE("monge refuses inputs without a transport map") {
  const DiscreteMeasure one(1, {{grid_point({0}), Rational(1)}});
  const DiscreteMeasure half(1, {{grid_point({1}), Rational(1, 2)},
                                 {grid_point({2}), Rational(1, 2)}});
  CHECK_THROWS_WITH_AS(solve_monge(one, half, CostFunction::l1()),
                       doctest::Contains("solve_kantorovich"),
                       std::invalid_argument);
}

TEST_CASE("brute force refusal above the cap") {
  const auto mu = delta_center(Partition({9}));
  CHECK_THROWS_AS(brute_force_monge(mu, mu, CostFunction::l1()),
                  std::domain_error);
  CHECK_NOTHROW(brute_force_monge(mu, mu, CostFunction::l1(), 9));
}

TEST_CASE("brute force reports every optimum") {
  // Two equal columns: swapping them is also optimal.
  const auto mu = delta_lattice(Partition({1, 1}));
  const auto res = brute_force_monge(mu, mu, CostFunction::l1());
  CHECK(res.optimal_matchings.size() == 1);  // only the identity is free
  const auto nu = delta_permuted(Partition({1, 1}), {2, 1});
  CHECK(nu == mu);
}

TEST_CASE("kantorovich splits the atom where no map exists") {
  const DiscreteMeasure one(1, {{grid_point({0}), Rational(1)}});
  const DiscreteMeasure half(1, {{grid_point({1}), Rational(1, 2)},
                                 {grid_point({2}), Rational(1, 2)}});
  const auto [plan, duals] = solve_kantorovich(one, half, CostFunction::l1());
  CHECK(plan.coupling[0][0] == Rational(1, 2));
  CHECK(plan.coupling[0][1] == Rational(1, 2));
  CHECK(*plan.cost_exact == Rational(3, 2));  // 1/2 * 1 + 1/2 * 2
  CHECK(*duals.objective_exact == *plan.cost_exact);
}

TEST_CASE("kantorovich equals monge on unit masses, with exact duals") {
  for (long long n = 1; n <= 5; ++n) {
    std::vector<DiscreteMeasure> measures;
    for (const auto& p : enumerate_partitions(n))
      measures.push_back(delta_center(p));
    for (const auto& a : measures)
      for (const auto& b : measures) {
        const auto [plan, duals] = solve_kantorovich(a, b, CostFunction::l1());
        const TransportPlan monge = solve_monge(a, b, CostFunction::l1());
        CHECK(*plan.cost_exact == *monge.cost_exact);
        CHECK(*duals.objective_exact == *plan.cost_exact);  // zero gap
        // Feasible potentials, complementary slackness on the support.
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j) {
            const Rational cij = CostFunction::l1().exact(a.atoms()[i].point,
                                                          b.atoms()[j].point);
            CHECK(duals.h_minus_exact[i] + duals.h_plus_exact[j] <= cij);
            if (plan.coupling[i][j] != Rational(0))
              CHECK(duals.h_minus_exact[i] + duals.h_plus_exact[j] == cij);
          }
        // Unit-mass coupling is a permutation matrix.
        for (const auto& row : plan.coupling) {
          int positive = 0;
          for (const auto& v : row)
            if (v != Rational(0)) {
              CHECK(v == Rational(1));
              ++positive;
            }
          CHECK(positive == 1);
        }
      }
  }
}

TEST_CASE("kantorovich rejects mismatched totals") {
  const DiscreteMeasure one(1, {{grid_point({0}), Rational(1)}});
  const DiscreteMeasure two(1, {{grid_point({1}), Rational(2)}});
  CHECK_THROWS_AS(solve_kantorovich(one, two, CostFunction::l1()),
                  std::invalid_argument);
}

TEST_CASE("optimal plans are cyclically monotone, suboptimal ones are caught") {
  const auto a = delta_center(Partition({3, 1}));
  const auto b = delta_center(Partition({2, 2}));
  for (const auto& c : {CostFunction::euclidean(), CostFunction::l1()}) {
    const TransportPlan optimal = solve_monge(a, b, c);
    const auto cert = check_c_cyclic_monotone(optimal, c, 4, CycleMode::Cyclic);
    CHECK(cert.monotone);
    CHECK_FALSE(cert.violation.has_value());

    // Every bijection: passes exhaustion exactly when it attains the
    // brute-force minimum; cyclic and all-permutation modes agree.
    const auto brute = brute_force_monge(a, b, c);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      TransportPlan plan;
      plan.mode = TransportPlan::Mode::Matching;
      plan.source = a;
      plan.target = b;
      plan.matching = perm;
      const bool cyc =
          check_c_cyclic_monotone(plan, c, 4, CycleMode::Cyclic).monotone;
      const bool full =
          check_c_cyclic_monotone(plan, c, 4, CycleMode::AllPermutations)
              .monotone;
      CHECK(cyc == full);
      const double cost = matching_cost(a, b, perm, c);
      const bool optimal_cost = cost <= brute.best.cost + kCostAbsTol;
      CHECK(cyc == optimal_cost);
      if (!cyc) {
        const auto bad =
            check_c_cyclic_monotone(plan, c, 4, CycleMode::Cyclic);
        REQUIRE(bad.violation.has_value());
        CHECK(bad.violation->lhs > bad.violation->rhs);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("single-atom plans are trivially certified") {
  const auto mu = delta_center(Partition({1}));
  const TransportPlan plan = solve_monge(mu, mu, CostFunction::euclidean());
  CHECK(check_c_cyclic_monotone(plan, CostFunction::euclidean(), 1).monotone);
}

TEST_CASE("partition distance demands a metric-like cost") {
  CHECK_THROWS_AS(partition_distance(Partition({2}), Partition({1, 1}),
                                     CostFunction::squared_euclidean()),
                  std::domain_error);
  CHECK_THROWS_AS(partition_distance(Partition({2}), Partition({1, 1}),
                                     CostFunction::power(2.0)),
                  std::domain_error);
  CHECK_NOTHROW(partition_distance(Partition({2}), Partition({1, 1}),
                                   CostFunction::power(0.5)));
  CHECK_THROWS_AS(partition_distance(Partition({2}), Partition({2, 1}),
                                     CostFunction::l1()),
                  std::invalid_argument);
}

TEST_CASE("distance works for higher dimensional partitions") {
  const auto family = enumerate_m_partitions(3, 2);
  for (const auto& a : family)
    for (const auto& b : family) {
      const double d = partition_distance(a, b, CostFunction::l1());
      CHECK(d >= 0.0);
      CHECK((d == 0.0) == (a == b));
    }
}

TEST_CASE("an optimal map can fix the common support") {
  for (long long n = 1; n <= 4; ++n) {
    const auto partitions = enumerate_partitions(n);
    for (const auto& c : {CostFunction::euclidean(), CostFunction::l1()})
      for (const auto& a : partitions)
        for (const auto& b : partitions) {
          const auto rep = verify_identity_on_intersection(a, b, c);
          CHECK(rep.equal);
          CHECK(rep.fixed_points >= 1);  // cell (1,1) is always shared
          if (a == b) {
            CHECK(rep.fixed_points == static_cast<std::size_t>(n));
            CHECK(rep.unconstrained_cost == doctest::Approx(0.0));
          }
        }
  }
}

TEST_CASE("reflection construction attains the optimum up to n = 7") {
  for (long long n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const auto rep = verify_reflection_optimal(p);
      CHECK(rep.equal);
      CHECK(rep.biconditional_ok);
      CHECK(rep.cyclic_certified);
      CHECK((rep.self_symmetric == (rep.constructed_cost < kCostAbsTol)));
    }
  const auto trivial = verify_reflection_optimal(Partition({1}));
  CHECK(trivial.self_symmetric);
  CHECK(trivial.zero_cost);
  const auto selfsym = verify_reflection_optimal(Partition({2, 1}));
  CHECK(selfsym.zero_cost);
  CHECK(selfsym.optimal_cost == doctest::Approx(0.0));
}

TEST_CASE("the Id-plus-reflection map stops being optimal at n = 8") {
  // (4,2,2): the cells (1,4) and (3,2) sit on opposite sides of the
  // diagonal on the same anti-diagonal, so their reflection segments
  // overlap and swapping targets is strictly cheaper. Confirmed by the
  // exhaustive oracle (unique optimum).
  const Partition p({4, 2, 2});
  const auto rep = verify_reflection_optimal(p);
  CHECK(rep.constructed_cost ==
        doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rep.optimal_cost ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(rep.equal);
  CHECK_FALSE(rep.cyclic_certified);  // consistent with suboptimality
  CHECK(rep.biconditional_ok);        // the zero-cost corollary still holds
  const auto brute =
      brute_force_monge(delta_center(p), delta_center(conjugate(p)),
                        CostFunction::euclidean(), 8);
  CHECK(brute.best.cost == doctest::Approx(rep.optimal_cost).epsilon(1e-12));
  CHECK(brute.optimal_matchings.size() == 1);

  // The corollary direction survives for every partition up to n = 9.
  for (long long n = 8; n <= 9; ++n)
    for (const auto& q : enumerate_partitions(n))
      CHECK(verify_reflection_optimal(q).biconditional_ok);
}

TEST_CASE("sigma scan specializes to the reflection theorem at m = 1") {
  for (long long n = 1; n <= 6; ++n) {
    const auto rows = scan_sigma_conjecture(
        n, 1, {CostFunction::euclidean(), CostFunction::l1()});
    for (const auto& row : rows) {
      CHECK_FALSE(row.rejected);
      CHECK(row.biconditional_ok);
      if (row.sigma == "12") {
        // identity: zero cost throughout
        CHECK(row.optimal_cost == doctest::Approx(0.0));
        CHECK(row.self_symmetric);
      } else {
        CHECK(row.patched_bijective);
        CHECK(row.patched_optimal);
      }
    }
  }
}

TEST_CASE("sigma scan covers m = 2 and matches the axis permutation") {
  const auto rows =
      scan_sigma_conjecture(3, 2, {CostFunction::euclidean()});
  CHECK(rows.size() == 6 * enumerate_m_partitions(3, 2).size());
  for (const auto& p : enumerate_m_partitions(3, 2))
    for (const auto& sigma : all_permutations(3)) {
      const auto sym = sigma_symmetric(p, sigma);
      REQUIRE(sym.has_value());
      CHECK(delta_center(*sym) == permute_axes(delta_center(p), sigma));
    }
  CHECK_THROWS_AS(
      scan_sigma_conjecture(2, 3, {CostFunction::euclidean()}),
      std::domain_error);
  CHECK_THROWS_AS(
      scan_sigma_conjecture(2, 2, {CostFunction::squared_euclidean()}),
      std::invalid_argument);
}
