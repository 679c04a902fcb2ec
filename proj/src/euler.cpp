#include "otpart/euler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "otpart/tolerances.hpp"
#include "otpart/transport.hpp"

namespace otpart {

PrimeSplit prime_split(long long m) {
  if (m < 1) throw std::domain_error("prime_split requires m >= 1");
  const long long g = m & (-m);  // largest power of two dividing m
  return PrimeSplit{m, g, m / g};
}

long long BlockMap::total() const {
  long long t = 0;
  for (const auto& b : blocks)
    t = std::accumulate(b.parts.begin(), b.parts.end(), t);
  return t;
}

int BlockMap::column_count() const {
  int k = 0;
  for (const auto& b : blocks)
    k += static_cast<int>(b.parts.size());
  return k;
}

GeneralizedPartition BlockMap::value() const {
  std::vector<long long> parts(static_cast<std::size_t>(column_count()), 0);
  for (const auto& b : blocks)
    for (std::size_t t = 0; t < b.parts.size(); ++t) {
      const int pos = b.positions[t];
      if (pos < 1 || pos > static_cast<int>(parts.size()) ||
          parts[static_cast<std::size_t>(pos - 1)] != 0)
        throw std::invalid_argument("block positions do not tile 1..k");
      parts[static_cast<std::size_t>(pos - 1)] = b.parts[t];
    }
  return GeneralizedPartition(std::move(parts));
}

PhiImage phi(const Partition& p) {
  if (!has_class(p, PartitionClass::AllDistinct))
    throw std::domain_error("phi requires all parts distinct");
  std::vector<BlockImage> blocks;
  std::vector<long long> parts;
  int offset = 0;
  for (int i = 1; i <= p.length(); ++i) {
    const PrimeSplit s = prime_split(p.part(i));
    BlockImage block;
    block.source_column = i;
    for (long long t = 0; t < s.g; ++t) {
      block.parts.push_back(s.u);
      block.positions.push_back(++offset);
      parts.push_back(s.u);
    }
    blocks.push_back(std::move(block));
  }
  return PhiImage{GeneralizedPartition(std::move(parts)), std::move(blocks)};
}

Partition phi_bar(const Partition& p) {
  std::vector<long long> parts = phi(p).value.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition phi_bar_inverse(const Partition& q) {
  if (!has_class(q, PartitionClass::AllOdd))
    throw std::domain_error("phi_bar_inverse requires all parts odd");
  std::map<long long, long long> multiplicity;
  for (long long v : q.parts()) ++multiplicity[v];
  std::vector<long long> parts;
  for (const auto& [u, count] : multiplicity)
    for (long long bit = 0; (count >> bit) != 0; ++bit)
      if ((count >> bit) & 1) parts.push_back(u << bit);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

CharacterizationReport characterize_odd(const Partition& p,
                                        const CostFunction& c) {
  if (!c.metric_like())
    throw std::domain_error("'" + c.name() + "' is not metric-like");
  CharacterizationReport rep;
  rep.property = has_class(p, PartitionClass::AllOdd);
  const DiscreteMeasure mu = delta_centered(p);
  const DiscreteMeasure reflected = reflect_axis(mu, 2);
  rep.measure_test = mu == reflected;
  const TransportPlan plan = solve_monge(mu, reflected, c);
  rep.witness_cost = plan.cost;
  rep.cost_test = plan.cost_exact ? *plan.cost_exact == Rational(0)
                                  : plan.cost < kCostAbsTol;
  rep.consistent =
      rep.property == rep.measure_test && rep.property == rep.cost_test;
  return rep;
}

CharacterizationReport characterize_distinct(const Partition& p,
                                             const CostFunction& c,
                                             int k_cap) {
  if (!c.metric_like())
    throw std::domain_error("'" + c.name() + "' is not metric-like");
  const int k = p.length();
  if (k > k_cap)
    throw std::domain_error("refusing the factorial sweep: k = " +
                            std::to_string(k) + " exceeds the cap of " +
                            std::to_string(k_cap));

  CharacterizationReport rep;
  rep.property = has_class(p, PartitionClass::AllDistinct);

  const DiscreteMeasure base = delta_lattice(p);
  bool any_equal = false;
  bool any_zero = false;
  // delta_pi^sigma depends on sigma only through the induced column
  // height arrangement; memoize solves per arrangement.
  std::map<std::vector<long long>, bool> zero_by_heights;
  for (const auto& sigma : all_permutations(k)) {
    bool identity = true;
    for (int i = 1; i <= k; ++i)
      if (sigma[static_cast<std::size_t>(i - 1)] != i) {
        identity = false;
        break;
      }
    if (identity) continue;
    std::vector<long long> heights(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i)
      heights[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)] =
          p.part(i);
    auto [it, fresh] = zero_by_heights.try_emplace(heights, false);
    if (fresh) {
      const DiscreteMeasure permuted = delta_permuted(p, sigma);
      if (permuted == base) {
        it->second = true;
        any_equal = true;
      } else {
        const TransportPlan plan = solve_monge(base, permuted, c);
        it->second = plan.cost_exact ? *plan.cost_exact == Rational(0)
                                     : plan.cost < kCostAbsTol;
      }
    } else if (it->second) {
      any_equal = true;  // equal heights means equal measures
    }
    if (it->second) any_zero = true;
  }
  // The proposition characterizes "not all distinct"; report the
  // distinct-side equivalence.
  rep.measure_test = !any_equal;
  rep.cost_test = !any_zero;
  rep.consistent =
      rep.property == rep.measure_test && rep.property == rep.cost_test;
  return rep;
}

namespace {

DiscreteMeasure block_measure(const std::vector<long long>& parts,
                              const std::vector<int>& positions) {
  std::vector<Atom> atoms;
  for (std::size_t t = 0; t < parts.size(); ++t)
    for (long long a = 1; a <= parts[t]; ++a)
      atoms.push_back({grid_point({positions[t], a}), Rational(1)});
  return DiscreteMeasure(2, std::move(atoms));
}

// Minimum matching cost between the reference block and `parts` placed
// at any increasing choice of distinct positions within 1..total_cols,
// with every distinct arrangement of the part multiset over the chosen
// positions considered.
double min_placement_cost(const DiscreteMeasure& reference,
                          std::vector<long long> parts, int total_cols,
                          const CostFunction& c) {
  std::sort(parts.begin(), parts.end());
  const int r = static_cast<int>(parts.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> positions(static_cast<std::size_t>(r));

  std::function<bool(int, int)> choose = [&](int start, int slot) {
    if (slot == r) {
      std::vector<long long> arrangement = parts;
      do {
        const DiscreteMeasure placed = block_measure(arrangement, positions);
        if (placed == reference) {
          best = 0.0;
          return false;  // supports coincide: global minimum reached
        }
        const TransportPlan plan = solve_monge(reference, placed, c);
        best = std::min(best, plan.cost);
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      return true;
    }
    for (int pos = start; pos <= total_cols - (r - slot - 1); ++pos) {
      positions[static_cast<std::size_t>(slot)] = pos;
      if (!choose(pos + 1, slot + 1)) return false;
    }
    return true;
  };
  choose(1, 0);
  return best;
}

}  // namespace

double euler_cost(const Partition& p, const BlockMap& psi,
                  const CostFunction& c) {
  if (!c.metric_like())
    throw std::domain_error("'" + c.name() + "' is not metric-like");
  const PhiImage reference = phi(p);

  if (static_cast<int>(psi.blocks.size()) != p.length())
    throw std::invalid_argument("psi must provide one block per source column");
  // Blocks must arrive in source order and tile the target positions.
  std::vector<char> seen_pos(static_cast<std::size_t>(psi.column_count()), 0);
  for (int i = 1; i <= p.length(); ++i) {
    const BlockImage& b = psi.blocks[static_cast<std::size_t>(i - 1)];
    if (b.source_column != i)
      throw std::invalid_argument("blocks must be listed by source column");
    if (b.parts.empty() || b.parts.size() != b.positions.size())
      throw std::invalid_argument("malformed block for column " +
                                  std::to_string(i));
    long long total = 0;
    for (long long v : b.parts) {
      if (v < 1 || v % 2 == 0)
        throw std::invalid_argument("block parts must be odd and positive");
      total += v;
    }
    if (total != p.part(i))
      throw std::invalid_argument(
          "block total " + std::to_string(total) + " for column " +
          std::to_string(i) + " differs from the source part " +
          std::to_string(p.part(i)));
    for (int pos : b.positions) {
      if (pos < 1 || pos > psi.column_count() ||
          seen_pos[static_cast<std::size_t>(pos - 1)])
        throw std::invalid_argument("block positions do not tile 1..k");
      seen_pos[static_cast<std::size_t>(pos - 1)] = 1;
    }
  }

  const int total_cols = psi.column_count();
  double sum = 0.0;
  std::map<std::pair<int, std::vector<long long>>, double> memo;
  for (int i = 1; i <= p.length(); ++i) {
    const BlockImage& ref_block = reference.blocks[static_cast<std::size_t>(i - 1)];
    std::vector<long long> parts = psi.blocks[static_cast<std::size_t>(i - 1)].parts;
    std::sort(parts.begin(), parts.end());
    const auto key = std::make_pair(i, parts);
    auto it = memo.find(key);
    if (it == memo.end()) {
      const DiscreteMeasure ref =
          block_measure(ref_block.parts, ref_block.positions);
      it = memo.emplace(key, min_placement_cost(ref, parts, total_cols, c)).first;
    }
    sum += it->second;
  }
  return sum;
}

}  // namespace otpart
