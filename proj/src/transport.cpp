#include "otpart/transport.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "otpart/solver_detail.hpp"
#include "otpart/tolerances.hpp"

namespace otpart {

namespace {

// Exact costs ride an integer fast path: l1/linf are integers once
// doubled, squared euclidean once quadrupled.
struct CostMatrix {
  bool exact = false;
  long long scale = 1;
  std::vector<std::vector<long long>> ints;
  std::vector<std::vector<double>> dbls;
};

long long exact_scaled(const CostFunction& c, long long scale,
                       const LatticePoint& x, const LatticePoint& y) {
  const Rational r = c.exact(x, y);
  return r.numerator() * (scale / r.denominator());
}

CostMatrix build_cost_matrix(const DiscreteMeasure& a, const DiscreteMeasure& b,
                             const CostFunction& c) {
  CostMatrix m;
  m.exact = c.exact_capable();
  const std::size_t na = a.size(), nb = b.size();
  if (m.exact) {
    m.scale = c.kind() == CostKind::SquaredEuclidean ? 4 : 2;
    m.ints.assign(na, std::vector<long long>(nb, 0));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        m.ints[i][j] =
            exact_scaled(c, m.scale, a.atoms()[i].point, b.atoms()[j].point);
  } else {
    m.dbls.assign(na, std::vector<double>(nb, 0.0));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        m.dbls[i][j] = c(a.atoms()[i].point, b.atoms()[j].point);
  }
  return m;
}

void require_monge_inputs(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("measures live in different dimensions");
  if (a.size() != b.size() || !a.all_unit_masses() || !b.all_unit_masses())
    throw std::invalid_argument(
        "no transport map need exist here (unequal support sizes or "
        "fractional masses); use solve_kantorovich");
}

std::vector<int> matching_from_flow(
    const std::vector<std::vector<long long>>& flow) {
  std::vector<int> matching(flow.size(), -1);
  for (std::size_t i = 0; i < flow.size(); ++i)
    for (std::size_t j = 0; j < flow[i].size(); ++j)
      if (flow[i][j] > 0) matching[i] = static_cast<int>(j);
  return matching;
}

}  // namespace

double matching_cost(const DiscreteMeasure& source,
                     const DiscreteMeasure& target,
                     const std::vector<int>& matching, const CostFunction& c) {
  double total = 0.0;
  for (std::size_t i = 0; i < matching.size(); ++i)
    total += c(source.atoms()[i].point,
               target.atoms()[static_cast<std::size_t>(matching[i])].point);
  return total;
}

TransportPlan solve_monge(const DiscreteMeasure& mu_minus,
                          const DiscreteMeasure& mu_plus,
                          const CostFunction& c) {
  require_monge_inputs(mu_minus, mu_plus);
  const std::size_t n = mu_minus.size();
  const std::vector<long long> ones(n, 1);
  const CostMatrix cm = build_cost_matrix(mu_minus, mu_plus, c);

  TransportPlan plan;
  plan.mode = TransportPlan::Mode::Matching;
  plan.source = mu_minus;
  plan.target = mu_plus;
  if (cm.exact) {
    auto res = detail::solve_transportation<long long>(ones, ones, cm.ints);
    plan.matching = matching_from_flow(res.flow);
    plan.cost_exact = Rational(res.total_cost, cm.scale);
    plan.cost = boost::rational_cast<double>(*plan.cost_exact);
  } else {
    auto res = detail::solve_transportation<double>(ones, ones, cm.dbls);
    plan.matching = matching_from_flow(res.flow);
    plan.cost = res.total_cost;
  }
  return plan;
}

BruteForceResult brute_force_monge(const DiscreteMeasure& mu_minus,
                                   const DiscreteMeasure& mu_plus,
                                   const CostFunction& c, std::size_t n_cap) {
  require_monge_inputs(mu_minus, mu_plus);
  const std::size_t n = mu_minus.size();
  if (n > n_cap)
    throw std::domain_error("brute force refused: " + std::to_string(n) +
                            " atoms exceed the cap of " + std::to_string(n_cap));
  const CostMatrix cm = build_cost_matrix(mu_minus, mu_plus, c);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  BruteForceResult out;
  if (cm.exact) {
    long long best = -1;
    auto cost_of = [&](const std::vector<int>& p) {
      long long s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += cm.ints[i][static_cast<std::size_t>(p[i])];
      return s;
    };
    do {
      const long long s = cost_of(perm);
      if (best < 0 || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (cost_of(perm) == best) out.optimal_matchings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.best.cost_exact = Rational(best, cm.scale);
    out.best.cost = boost::rational_cast<double>(*out.best.cost_exact);
  } else {
    double best = std::numeric_limits<double>::infinity();
    auto cost_of = [&](const std::vector<int>& p) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += cm.dbls[i][static_cast<std::size_t>(p[i])];
      return s;
    };
    do {
      best = std::min(best, cost_of(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (cost_of(perm) <= best + kCostAbsTol)
        out.optimal_matchings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.best.cost = best;
  }
  out.best.mode = TransportPlan::Mode::Matching;
  out.best.source = mu_minus;
  out.best.target = mu_plus;
  out.best.matching = out.optimal_matchings.front();
  return out;
}

KantorovichSolution solve_kantorovich(const DiscreteMeasure& mu_minus,
                                      const DiscreteMeasure& mu_plus,
                                      const CostFunction& c) {
  if (mu_minus.dim() != mu_plus.dim())
    throw std::invalid_argument("measures live in different dimensions");
  if (mu_minus.total() != mu_plus.total())
    throw std::invalid_argument("total masses differ: " +
                                to_string(mu_minus.total()) + " vs " +
                                to_string(mu_plus.total()));

  long long denom_lcm = 1;
  for (const Atom& a : mu_minus.atoms())
    denom_lcm = std::lcm(denom_lcm, a.mass.denominator());
  for (const Atom& a : mu_plus.atoms())
    denom_lcm = std::lcm(denom_lcm, a.mass.denominator());

  auto scaled = [&](const DiscreteMeasure& mu) {
    std::vector<long long> s;
    s.reserve(mu.size());
    for (const Atom& a : mu.atoms())
      s.push_back(a.mass.numerator() * (denom_lcm / a.mass.denominator()));
    return s;
  };
  const std::vector<long long> supply = scaled(mu_minus);
  const std::vector<long long> demand = scaled(mu_plus);
  const CostMatrix cm = build_cost_matrix(mu_minus, mu_plus, c);

  KantorovichSolution sol;
  sol.plan.mode = TransportPlan::Mode::Coupling;
  sol.plan.source = mu_minus;
  sol.plan.target = mu_plus;
  sol.plan.coupling.assign(mu_minus.size(),
                           std::vector<Rational>(mu_plus.size(), Rational(0)));

  if (cm.exact) {
    auto res = detail::solve_transportation<long long>(supply, demand, cm.ints);
    for (std::size_t i = 0; i < mu_minus.size(); ++i)
      for (std::size_t j = 0; j < mu_plus.size(); ++j)
        if (res.flow[i][j] > 0)
          sol.plan.coupling[i][j] = Rational(res.flow[i][j], denom_lcm);
    sol.plan.cost_exact = Rational(res.total_cost, cm.scale * denom_lcm);
    sol.plan.cost = boost::rational_cast<double>(*sol.plan.cost_exact);

    Rational obj(0);
    for (std::size_t i = 0; i < mu_minus.size(); ++i) {
      const Rational hi(res.pot_source[i], cm.scale);
      sol.duals.h_minus_exact.push_back(hi);
      sol.duals.h_minus.push_back(boost::rational_cast<double>(hi));
      obj += mu_minus.atoms()[i].mass * hi;
    }
    for (std::size_t j = 0; j < mu_plus.size(); ++j) {
      const Rational hj(res.pot_target[j], cm.scale);
      sol.duals.h_plus_exact.push_back(hj);
      sol.duals.h_plus.push_back(boost::rational_cast<double>(hj));
      obj += mu_plus.atoms()[j].mass * hj;
    }
    sol.duals.objective_exact = obj;
    sol.duals.objective = boost::rational_cast<double>(obj);
  } else {
    auto res = detail::solve_transportation<double>(supply, demand, cm.dbls);
    for (std::size_t i = 0; i < mu_minus.size(); ++i)
      for (std::size_t j = 0; j < mu_plus.size(); ++j)
        if (res.flow[i][j] > 0)
          sol.plan.coupling[i][j] = Rational(res.flow[i][j], denom_lcm);
    sol.plan.cost = res.total_cost / static_cast<double>(denom_lcm);
    double obj = 0;
    for (std::size_t i = 0; i < mu_minus.size(); ++i) {
      sol.duals.h_minus.push_back(res.pot_source[i]);
      obj += boost::rational_cast<double>(mu_minus.atoms()[i].mass) *
             res.pot_source[i];
    }
    for (std::size_t j = 0; j < mu_plus.size(); ++j) {
      sol.duals.h_plus.push_back(res.pot_target[j]);
      obj += boost::rational_cast<double>(mu_plus.atoms()[j].mass) *
             res.pot_target[j];
    }
    sol.duals.objective = obj;
  }
  return sol;
}

CyclicCheckResult check_c_cyclic_monotone(const TransportPlan& plan,
                                          const CostFunction& c, int max_cycle,
                                          CycleMode mode) {
  if (plan.mode != TransportPlan::Mode::Matching)
    throw std::invalid_argument("cyclic monotonicity checks matching plans");
  const int n = static_cast<int>(plan.matching.size());
  max_cycle = std::min(max_cycle, n);
  if (max_cycle < 2) return CyclicCheckResult{};

  // Pair list: x_i source atom i, y_i its matched target atom.
  const bool exact = c.exact_capable();
  const long long scale =
      c.kind() == CostKind::SquaredEuclidean ? 4 : 2;  // unused when !exact
  std::vector<std::vector<long long>> icost;
  std::vector<std::vector<double>> dcost;
  const auto& src = plan.source.atoms();
  const auto& dst = plan.target.atoms();
  if (exact) {
    icost.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t)
        icost[i][t] = exact_scaled(
            c, scale, src[static_cast<std::size_t>(i)].point,
            dst[static_cast<std::size_t>(plan.matching[static_cast<std::size_t>(t)])]
                .point);
  } else {
    dcost.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t)
        dcost[i][t] =
            c(src[static_cast<std::size_t>(i)].point,
              dst[static_cast<std::size_t>(plan.matching[static_cast<std::size_t>(t)])]
                  .point);
  }

  CyclicCheckResult result;
  std::vector<int> subset;

  // Tests one assignment "pair order[t] takes its x from order[t+1]"
  // (cyclic) or "pair subset[t] takes its x from subset[sigma[t]]".
  auto test = [&](const std::vector<int>& receivers,
                  const std::vector<int>& donors) {
    ++result.permutations_checked;
    if (exact) {
      long long lhs = 0, rhs = 0;
      for (std::size_t t = 0; t < receivers.size(); ++t) {
        lhs += icost[receivers[t]][receivers[t]];
        rhs += icost[donors[t]][receivers[t]];
      }
      if (lhs > rhs) {
        result.monotone = false;
        result.violation =
            CycleViolation{receivers, donors,
                           static_cast<double>(lhs) / static_cast<double>(scale),
                           static_cast<double>(rhs) / static_cast<double>(scale)};
      }
    } else {
      double lhs = 0, rhs = 0;
      for (std::size_t t = 0; t < receivers.size(); ++t) {
        lhs += dcost[receivers[t]][receivers[t]];
        rhs += dcost[donors[t]][receivers[t]];
      }
      if (lhs > rhs + kCostAbsTol) {
        result.monotone = false;
        result.violation = CycleViolation{receivers, donors, lhs, rhs};
      }
    }
    return result.monotone;
  };

  auto check_subset = [&]() {
    const int k = static_cast<int>(subset.size());
    if (mode == CycleMode::Cyclic) {
      // All distinct cycles through the subset: first element pinned,
      // remaining (k-1)! orders.
      std::vector<int> order = subset;
      std::sort(order.begin() + 1, order.end());
      do {
        std::vector<int> donors(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t)
          donors[static_cast<std::size_t>(t)] =
              order[static_cast<std::size_t>((t + 1) % k)];
        if (!test(order, donors)) return false;
      } while (std::next_permutation(order.begin() + 1, order.end()));
    } else {
      std::vector<int> donors = subset;
      do {
        if (donors == subset) continue;  // identity permutation
        if (!test(subset, donors)) return false;
      } while (std::next_permutation(donors.begin(), donors.end()));
    }
    return true;
  };

  // Enumerate subsets of each size up to max_cycle.
  std::function<bool(int, int)> combos = [&](int start, int want) {
    if (want == 0) return check_subset();
    for (int i = start; i <= n - want; ++i) {
      subset.push_back(i);
      const bool ok = combos(i + 1, want - 1);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (int k = 2; k <= max_cycle; ++k)
    if (!combos(0, k)) break;
  return result;
}

double partition_distance(const MPartition& p_minus, const MPartition& p_plus,
                          const CostFunction& c) {
  if (!c.metric_like())
    throw std::domain_error("'" + c.name() +
                            "' is not metric-like; the partition distance is "
                            "only defined for metric-like costs");
  if (p_minus.dim() != p_plus.dim())
    throw std::invalid_argument("partitions have different dimensions");
  if (p_minus.total() != p_plus.total())
    throw std::invalid_argument("partitions have different totals");
  return solve_monge(delta_center(p_minus), delta_center(p_plus), c).cost;
}

double partition_distance(const Partition& p_minus, const Partition& p_plus,
                          const CostFunction& c) {
  return partition_distance(MPartition::from_partition(p_minus),
                            MPartition::from_partition(p_plus), c);
}

namespace {

DiscreteMeasure drop_points(const DiscreteMeasure& mu,
                            const std::vector<LatticePoint>& points) {
  std::vector<Atom> kept;
  for (const Atom& a : mu.atoms())
    if (!std::binary_search(points.begin(), points.end(), a.point))
      kept.push_back(a);
  if (kept.empty()) return DiscreteMeasure();
  return DiscreteMeasure(mu.dim(), std::move(kept));
}

IntersectionReport intersection_report(const DiscreteMeasure& a,
                                       const DiscreteMeasure& b,
                                       const CostFunction& c) {
  std::vector<LatticePoint> common;
  std::ranges::set_intersection(a.support(), b.support(),
                                std::back_inserter(common));
  IntersectionReport rep;
  rep.fixed_points = common.size();

  const TransportPlan unconstrained = solve_monge(a, b, c);
  rep.unconstrained_cost = unconstrained.cost;

  const DiscreteMeasure ra = drop_points(a, common);
  const DiscreteMeasure rb = drop_points(b, common);
  std::optional<Rational> constrained_exact;
  if (ra.size() == 0) {
    rep.constrained_cost = 0.0;
    constrained_exact = Rational(0);
  } else {
    const TransportPlan constrained = solve_monge(ra, rb, c);
    rep.constrained_cost = constrained.cost;
    constrained_exact = constrained.cost_exact;
  }
  if (unconstrained.cost_exact && constrained_exact)
    rep.equal = *unconstrained.cost_exact == *constrained_exact;
  else
    rep.equal = costs_equal(rep.constrained_cost, rep.unconstrained_cost);
  return rep;
}

}  // namespace

IntersectionReport verify_identity_on_intersection(const MPartition& p_minus,
                                                   const MPartition& p_plus,
                                                   const CostFunction& c) {
  return intersection_report(delta_center(p_minus), delta_center(p_plus), c);
}

IntersectionReport verify_identity_on_intersection(const Partition& p_minus,
                                                   const Partition& p_plus,
                                                   const CostFunction& c) {
  return verify_identity_on_intersection(MPartition::from_partition(p_minus),
                                         MPartition::from_partition(p_plus), c);
}

namespace {

// Index of a point inside a measure's sorted atom list; -1 if absent.
int atom_index(const DiscreteMeasure& mu, const LatticePoint& p) {
  const auto& atoms = mu.atoms();
  auto it = std::lower_bound(
      atoms.begin(), atoms.end(), p,
      [](const Atom& a, const LatticePoint& q) { return a.point < q; });
  if (it == atoms.end() || !(it->point == p)) return -1;
  return static_cast<int>(it - atoms.begin());
}

// Id on the common support, `move` elsewhere. Returns the matching, or
// nullopt when the patched assignment fails to be a bijection.
std::optional<std::vector<int>> patched_matching(
    const DiscreteMeasure& from, const DiscreteMeasure& to,
    const std::function<LatticePoint(const LatticePoint&)>& move) {
  std::vector<int> matching(from.size(), -1);
  std::vector<char> used(to.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const LatticePoint& x = from.atoms()[i].point;
    const LatticePoint y = to.contains(x) ? x : move(x);
    const int j = atom_index(to, y);
    if (j < 0 || used[static_cast<std::size_t>(j)]) return std::nullopt;
    used[static_cast<std::size_t>(j)] = 1;
    matching[i] = j;
  }
  return matching;
}

}  // namespace

ReflectionReport verify_reflection_optimal(const Partition& p) {
  const CostFunction c = CostFunction::euclidean();
  const DiscreteMeasure mu = delta_center(p);
  const DiscreteMeasure nu = delta_center(conjugate(p));

  auto swap_xy = [](const LatticePoint& q) {
    return LatticePoint{{q.coords2[1], q.coords2[0]}};
  };
  auto matching = patched_matching(mu, nu, swap_xy);
  if (!matching)
    throw std::logic_error("reflection construction failed to be a bijection");

  ReflectionReport rep;
  rep.constructed_cost = matching_cost(mu, nu, *matching, c);
  const TransportPlan optimal = solve_monge(mu, nu, c);
  rep.optimal_cost = optimal.cost;
  rep.equal = costs_equal(rep.constructed_cost, rep.optimal_cost);
  rep.self_symmetric = is_self_symmetric(p);
  rep.zero_cost = mu == nu;  // exact support equality
  rep.biconditional_ok = (rep.self_symmetric == rep.zero_cost) &&
                         (rep.zero_cost == (rep.optimal_cost < kCostAbsTol));

  TransportPlan constructed;
  constructed.mode = TransportPlan::Mode::Matching;
  constructed.source = mu;
  constructed.target = nu;
  constructed.matching = *matching;
  constructed.cost = rep.constructed_cost;
  const int n = static_cast<int>(mu.size());
  const int depth = n <= 6 ? n : 3;
  rep.cyclic_certified =
      check_c_cyclic_monotone(constructed, c, depth, CycleMode::Cyclic).monotone;
  return rep;
}

std::vector<SigmaScanRow> scan_sigma_conjecture(
    long long n, int m, const std::vector<CostFunction>& costs) {
  if (m < 1 || m > 2)
    throw std::domain_error("conjecture scan supports m in {1, 2}");
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (const CostFunction& c : costs)
    if (!c.metric_like())
      throw std::invalid_argument("'" + c.name() +
                                  "' is not metric-like; the conjecture "
                                  "concerns metric-like costs");

  std::vector<SigmaScanRow> rows;
  const auto sigmas = all_permutations(m + 1);
  for (const MPartition& pi : enumerate_m_partitions(n, m)) {
    const DiscreteMeasure a = delta_center(pi);
    for (const auto& sigma : sigmas) {
      std::string sigma_str;
      for (int v : sigma) sigma_str += std::to_string(v);
      const auto sym = sigma_symmetric(pi, sigma);
      if (!sym) {
        for (const CostFunction& c : costs) {
          SigmaScanRow row;
          row.n = n;
          row.partition = format_mpartition(pi);
          row.sigma = sigma_str;
          row.cost_name = c.name();
          row.rejected = true;
          rows.push_back(std::move(row));
        }
        continue;
      }
      const DiscreteMeasure b = delta_center(*sym);
      auto move = [&sigma](const LatticePoint& q) {
        LatticePoint img;
        img.coords2.resize(q.coords2.size());
        for (std::size_t j = 0; j < q.coords2.size(); ++j)
          img.coords2[static_cast<std::size_t>(sigma[j] - 1)] = q.coords2[j];
        return img;
      };
      const auto patched = patched_matching(a, b, move);
      std::vector<int> plain(a.size(), -1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const int j = atom_index(b, move(a.atoms()[i].point));
        if (j < 0) throw std::logic_error("T_sigma does not map onto the target");
        plain[i] = j;
      }
      const bool selfsym = pi == *sym;
      for (const CostFunction& c : costs) {
        SigmaScanRow row;
        row.n = n;
        row.partition = format_mpartition(pi);
        row.sigma = sigma_str;
        row.cost_name = c.name();
        const TransportPlan optimal = solve_monge(a, b, c);
        row.optimal_cost = optimal.cost;
        row.plain_cost = matching_cost(a, b, plain, c);
        row.plain_optimal = costs_equal(row.plain_cost, row.optimal_cost);
        if (patched) {
          row.patched_bijective = true;
          row.patched_cost = matching_cost(a, b, *patched, c);
          row.patched_optimal = costs_equal(row.patched_cost, row.optimal_cost);
        }
        row.self_symmetric = selfsym;
        if (optimal.cost_exact)
          row.zero_cost = *optimal.cost_exact == Rational(0);
        else
          row.zero_cost = optimal.cost < kCostAbsTol;
        row.biconditional_ok = row.self_symmetric == row.zero_cost;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace otpart
