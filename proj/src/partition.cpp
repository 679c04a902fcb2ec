#include "otpart/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace otpart {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  total_ = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("part " + std::to_string(i + 1) +
                                  " is not positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("part " + std::to_string(i + 1) +
                                  " exceeds part " + std::to_string(i));
    total_ += parts_[i];
  }
}

long long Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

GeneralizedPartition::GeneralizedPartition(std::vector<long long> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("generalized partition needs at least one part");
  total_ = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("part " + std::to_string(i + 1) +
                                  " is not positive");
    total_ += parts_[i];
  }
}

std::set<PartitionClass> classify(const Partition& p) {
  std::set<PartitionClass> tags;
  const auto& a = p.parts();
  if (std::all_of(a.begin(), a.end(), [](long long v) { return v % 2 == 1; }))
    tags.insert(PartitionClass::AllOdd);
  if (std::adjacent_find(a.begin(), a.end()) == a.end())
    tags.insert(PartitionClass::AllDistinct);
  if (is_self_symmetric(p)) tags.insert(PartitionClass::SelfSymmetric);
  return tags;
}

bool has_class(const Partition& p, PartitionClass c) {
  switch (c) {
    case PartitionClass::AllOdd: {
      const auto& a = p.parts();
      return std::all_of(a.begin(), a.end(),
                         [](long long v) { return v % 2 == 1; });
    }
    case PartitionClass::AllDistinct: {
      const auto& a = p.parts();
      return std::adjacent_find(a.begin(), a.end()) == a.end();
    }
    case PartitionClass::SelfSymmetric:
      return is_self_symmetric(p);
  }
  return false;
}

PartitionClass parse_class_tag(const std::string& tag) {
  if (tag == "all_odd") return PartitionClass::AllOdd;
  if (tag == "all_distinct") return PartitionClass::AllDistinct;
  if (tag == "self_symmetric") return PartitionClass::SelfSymmetric;
  throw std::invalid_argument("unknown class tag '" + tag + "'");
}

std::string class_tag_name(PartitionClass c) {
  switch (c) {
    case PartitionClass::AllOdd: return "all_odd";
    case PartitionClass::AllDistinct: return "all_distinct";
    case PartitionClass::SelfSymmetric: return "self_symmetric";
  }
  return "?";
}

Partition conjugate(const Partition& p) {
  // Column heights of the transposed Ferrer board.
  std::vector<long long> out(static_cast<std::size_t>(p.parts().front()), 0);
  for (long long v : p.parts())
    for (long long j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool is_self_symmetric(const Partition& p) { return conjugate(p) == p; }

std::vector<Partition> enumerate_partitions(long long n) {
  return enumerate_partitions(n, nullptr);
}

std::vector<Partition> enumerate_partitions(
    long long n, const std::function<bool(const Partition&)>& filter) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions requires n >= 1");
  std::vector<Partition> out;
  std::vector<long long> cur{n};
  for (;;) {
    Partition p(cur);
    if (!filter || filter(p)) out.push_back(p);
    // Next in lexicographically decreasing order: shrink the rightmost
    // part above 1 and redistribute the freed units greedily.
    int j = static_cast<int>(cur.size()) - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == 1) --j;
    if (j < 0) break;
    long long spare = static_cast<long long>(cur.size()) - 1 - j + 1;
    cur.resize(static_cast<std::size_t>(j) + 1);
    long long r = --cur[static_cast<std::size_t>(j)];
    while (spare > r) {
      cur.push_back(r);
      spare -= r;
    }
    cur.push_back(spare);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<long long> parts;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("partition literal, position " +
                                std::to_string(pos + 1) + ": " + what);
  };
  while (pos < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected digit");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000'000) fail("part too large");
      ++pos;
    }
    parts.push_back(v);
    if (pos < text.size()) {
      if (text[pos] != '+') fail("expected '+'");
      ++pos;
      if (pos == text.size()) fail("dangling '+'");
    }
  }
  if (parts.empty())
    throw std::invalid_argument("partition literal, position 1: empty input");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1)
      throw std::invalid_argument("partition literal, part " +
                                  std::to_string(i + 1) + ": must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument(
          "partition literal, part " + std::to_string(i + 1) +
          ": breaks the decreasing order (" + std::to_string(parts[i]) + " after " +
          std::to_string(parts[i - 1]) + ")");
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += '+';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string format_generalized(const GeneralizedPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += '+';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

}  // namespace otpart
