#pragma once

#include <compare>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace otpart {

/// An integer partition of n: parts n1 >= n2 >= ... >= nk >= 1 with
/// sum n. Immutable after construction; construction validates.
class Partition {
 public:
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  long long total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// 1-based entry function: part(i) = n_i for 1 <= i <= k, else 0.
  long long part(int i) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  /// Lexicographic order on part sequences.
  std::strong_ordering operator<=>(const Partition& o) const {
    return parts_ <=> o.parts_;
  }

 private:
  std::vector<long long> parts_;
  long long total_;
};

/// A part sequence summing to n without the monotonicity requirement.
class GeneralizedPartition {
 public:
  explicit GeneralizedPartition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  long long total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool operator==(const GeneralizedPartition& o) const = default;

 private:
  std::vector<long long> parts_;
  long long total_;
};

enum class PartitionClass { AllOdd, AllDistinct, SelfSymmetric };

/// Direct arithmetic classification (no transport involved).
std::set<PartitionClass> classify(const Partition& p);
bool has_class(const Partition& p, PartitionClass c);
PartitionClass parse_class_tag(const std::string& tag);
std::string class_tag_name(PartitionClass c);

/// sym(p): reflect the Ferrer support across x = y. An involution.
Partition conjugate(const Partition& p);
bool is_self_symmetric(const Partition& p);

/// All partitions of n in lexicographically decreasing part order,
/// e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Throws on n < 1.
std::vector<Partition> enumerate_partitions(long long n);
std::vector<Partition> enumerate_partitions(
    long long n, const std::function<bool(const Partition&)>& filter);

/// Text format "5+4+3+1". Parse errors report the character position;
/// invariant violations report the offending part index.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);
std::string format_generalized(const GeneralizedPartition& p);

}  // namespace otpart
