#pragma once

#include <vector>

#include "otpart/cost.hpp"
#include "otpart/measure.hpp"
#include "otpart/partition.hpp"

namespace otpart {

/// m = g * u with g the largest power of two dividing m and u odd.
struct PrimeSplit {
  long long m;
  long long g;
  long long u;
};

PrimeSplit prime_split(long long m);

/// One source column's image under a block map: `parts` odd values
/// occupying `positions` (1-based, disjoint across blocks) within the
/// generalized target partition.
struct BlockImage {
  int source_column = 0;             // 1-based i
  std::vector<long long> parts;      // odd, sum equals n_i
  std::vector<int> positions;        // same length as parts
};

/// A psi map presented as an explicit per-column block decomposition of
/// a generalized odd partition of n.
struct BlockMap {
  std::vector<BlockImage> blocks;

  long long total() const;
  int column_count() const;  // number of target positions
  GeneralizedPartition value() const;
};

struct PhiImage {
  GeneralizedPartition value;
  std::vector<BlockImage> blocks;

  BlockMap block_map() const { return BlockMap{blocks}; }
};

/// phi: replace each part n_i by g(n_i) copies of u(n_i), blocks kept
/// in source order at consecutive positions. Requires all parts
/// distinct.
PhiImage phi(const Partition& p);

/// Sorted phi image; the Glaisher bijection onto all-odd partitions.
Partition phi_bar(const Partition& p);

/// Inverse direction: group equal odd parts, split each multiplicity
/// into binary powers, emit parts u * 2^j. Requires all parts odd;
/// the result has all parts distinct.
Partition phi_bar_inverse(const Partition& q);

struct CharacterizationReport {
  bool property = false;      // the arithmetic class test
  bool measure_test = false;  // the support/measure-level equivalence
  bool cost_test = false;     // the zero-transport-cost equivalence
  bool consistent = false;
  double witness_cost = 0.0;  // cost backing the cost_test verdict
};

/// all-odd <=> delta^_pi is invariant under reflection on the x-axis
/// <=> the optimal transport cost to its reflection is zero.
CharacterizationReport characterize_odd(const Partition& p,
                                        const CostFunction& c);

/// not all distinct <=> some non-identity column permutation fixes
/// delta_pi <=> some non-identity sigma yields zero transport cost.
/// Sweeps all sigma in Perm(k)\{Id}; refuses k above the cap.
CharacterizationReport characterize_distinct(const Partition& p,
                                             const CostFunction& c,
                                             int k_cap = 8);

/// The constructed cost on D x O: for each source column i, the minimum
/// matching cost between the reference block measure of phi(n_i) and
/// the measure of psi's block for i, minimized over all injective
/// placements of the block's columns within psi(pi)'s positions; summed
/// over i. Zero exactly when every block matches phi's block values.
/// Each block's total must equal its source part.
double euler_cost(const Partition& p, const BlockMap& psi,
                  const CostFunction& c);

}  // namespace otpart
