#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "otpart/partition.hpp"

namespace otpart {

/// An m-dimensional partition of n: positive entries n_{i1..im} keyed
/// by 1-based index tuples, monotone decreasing along every axis, with
/// a staircase index support (every componentwise-smaller tuple of a
/// present tuple is present). Full-box supports are the special case
/// where the support is an exact k1 x ... x km box.
///
/// Equivalently, the Young cell set {(i1..im, a) : a <= n_{i1..im}} is
/// a finite lower set in N^{m+1}; a Partition is the m = 1 case.
class MPartition {
 public:
  using Index = std::vector<int>;

  MPartition(int dim, std::map<Index, long long> entries);

  static MPartition from_partition(const Partition& p);

  int dim() const { return dim_; }
  long long total() const { return total_; }
  const std::map<Index, long long>& entries() const { return entries_; }

  /// k_j = largest index appearing along axis j (1-based axes).
  const std::vector<int>& shape() const { return shape_; }

  /// True when the index support is the full shape() box.
  bool is_full_box() const;

  /// Young tableau cells as (dim+1)-tuples (i1..im, a), 1-based.
  std::vector<Index> cells() const;

  /// Only valid for dim() == 1.
  Partition as_partition() const;

  bool operator==(const MPartition& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

 private:
  int dim_;
  std::map<Index, long long> entries_;
  std::vector<int> shape_;
  long long total_;
};

/// Enumeration-order predicate: compares the (index, entry) pair
/// sequences in lexicographic support order, larger entries first and
/// smaller index tuples first. Total order on P_m(n).
bool canonical_less(const MPartition& a, const MPartition& b);

/// All m-dimensional partitions of n, each exactly once, sorted by
/// canonical_less. Throws on n < 1 or m < 1.
std::vector<MPartition> enumerate_m_partitions(long long n, int m);

/// Rebuild an MPartition from a raw cell set; std::nullopt when the
/// cells do not form a valid Young tableau (non-staircase support or
/// gapped columns).
std::optional<MPartition> mpartition_from_cells(
    int dim, const std::set<MPartition::Index>& cells);

/// Apply the coordinate permutation T_sigma to the Young cell set of p
/// and read the result back. sigma is one-line notation over the m+1
/// cell axes (1-based images). Returns std::nullopt when the permuted
/// cell set fails validation; throws on arity mismatch.
std::optional<MPartition> sigma_symmetric(const MPartition& p,
                                          const std::vector<int>& sigma);

/// All permutations of {1..k} in lexicographic one-line order.
std::vector<std::vector<int>> all_permutations(int k);

/// Compact nested-array rendering, row-major over axis 1: "[[2,1],[1]]".
std::string format_mpartition(const MPartition& p);

}  // namespace otpart
