#include "otpart/mpartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace otpart {

namespace {

using Arr = std::map<MPartition::Index, long long>;

long long arr_total(const Arr& a) {
  long long t = 0;
  for (const auto& [k, v] : a) t += v;
  return t;
}

// Axis-1 slice t of a dim-dimensional array, with the first index dropped.
Arr slice_of(const Arr& a, int t) {
  Arr out;
  for (const auto& [k, v] : a)
    if (k.front() == t) out.emplace(MPartition::Index(k.begin() + 1, k.end()), v);
  return out;
}

Arr pointwise_min(const Arr& a, const Arr& b) {
  Arr out;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it != b.end()) out.emplace(k, std::min(v, it->second));
  }
  return out;
}

// All dim-dimensional partition arrays of total s, pointwise dominated
// by `bound` when given (support contained, entries no larger).
void enum_arrays(int dim, long long s, const Arr* bound,
                 const std::function<void(const Arr&)>& emit) {
  if (s < 1) return;
  if (dim == 0) {
    if (bound && s > bound->at({})) return;
    emit(Arr{{{}, s}});
    return;
  }
  // Chain of axis-1 slices, each dominated by its predecessor (and by
  // the bound's matching slice).
  struct Chain {
    int dim;
    const Arr* bound;
    const std::function<void(const Arr&)>& emit;
    std::vector<std::pair<int, Arr>> acc;  // (slice position, slice)

    void assemble() const {
      Arr whole;
      for (const auto& [t, sl] : acc)
        for (const auto& [k, v] : sl) {
          MPartition::Index idx;
          idx.reserve(k.size() + 1);
          idx.push_back(t);
          idx.insert(idx.end(), k.begin(), k.end());
          whole.emplace(std::move(idx), v);
        }
      emit(whole);
    }

    void extend(int t, long long remaining, const Arr& prev) {
      if (remaining == 0) {
        assemble();
        return;
      }
      Arr cap = prev;
      if (bound) {
        Arr bs = slice_of(*bound, t);
        if (bs.empty()) return;
        cap = pointwise_min(prev, bs);
        if (cap.empty()) return;
      }
      const long long cap_total = arr_total(cap);
      for (long long st = std::min(remaining, cap_total); st >= 1; --st) {
        enum_arrays(dim - 1, st, &cap, [&](const Arr& sl) {
          acc.emplace_back(t, sl);
          extend(t + 1, remaining - st, sl);
          acc.pop_back();
        });
      }
    }
  };

  for (long long s1 = s; s1 >= 1; --s1) {
    Arr first_bound;
    const Arr* fb = nullptr;
    if (bound) {
      first_bound = slice_of(*bound, 1);
      if (first_bound.empty()) return;
      fb = &first_bound;
    }
    enum_arrays(dim - 1, s1, fb, [&](const Arr& first) {
      Chain chain{dim, bound, emit, {}};
      chain.acc.emplace_back(1, first);
      chain.extend(2, s - s1, first);
    });
  }
}

std::string format_arr(int dim, const Arr& a) {
  if (dim == 0) return std::to_string(a.at({}));
  std::string out = "[";
  int t = 1;
  for (;; ++t) {
    Arr sl = slice_of(a, t);
    if (sl.empty()) break;
    if (t > 1) out += ',';
    out += format_arr(dim - 1, sl);
  }
  out += ']';
  return out;
}

}  // namespace

MPartition::MPartition(int dim, std::map<Index, long long> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) throw std::invalid_argument("dimension must be >= 1");
  if (entries_.empty()) throw std::invalid_argument("partition array is empty");
  shape_.assign(static_cast<std::size_t>(dim_), 0);
  total_ = 0;
  for (const auto& [idx, v] : entries_) {
    if (static_cast<int>(idx.size()) != dim_)
      throw std::invalid_argument("index arity differs from dimension");
    for (int a = 0; a < dim_; ++a) {
      if (idx[static_cast<std::size_t>(a)] < 1)
        throw std::invalid_argument("indices are 1-based");
      shape_[static_cast<std::size_t>(a)] =
          std::max(shape_[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(a)]);
    }
    if (v < 1) throw std::invalid_argument("entries must be positive");
    total_ += v;
  }
  // Staircase support and per-axis monotonicity; checking the immediate
  // predecessor along each axis covers both by induction.
  for (const auto& [idx, v] : entries_) {
    for (int a = 0; a < dim_; ++a) {
      if (idx[static_cast<std::size_t>(a)] == 1) continue;
      Index prev = idx;
      --prev[static_cast<std::size_t>(a)];
      auto it = entries_.find(prev);
      if (it == entries_.end())
        throw std::invalid_argument("support is not a staircase set");
      if (it->second < v)
        throw std::invalid_argument("entries increase along axis " +
                                    std::to_string(a + 1));
    }
  }
}

MPartition MPartition::from_partition(const Partition& p) {
  std::map<Index, long long> entries;
  for (int i = 1; i <= p.length(); ++i) entries.emplace(Index{i}, p.part(i));
  return MPartition(1, std::move(entries));
}

bool MPartition::is_full_box() const {
  long long cells = 1;
  for (int k : shape_) cells *= k;
  return static_cast<long long>(entries_.size()) == cells;
}

std::vector<MPartition::Index> MPartition::cells() const {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(total_));
  for (const auto& [idx, v] : entries_)
    for (long long a = 1; a <= v; ++a) {
      Index cell = idx;
      cell.push_back(static_cast<int>(a));
      out.push_back(std::move(cell));
    }
  return out;
}

Partition MPartition::as_partition() const {
  if (dim_ != 1)
    throw std::logic_error("as_partition requires a 1-dimensional partition");
  std::vector<long long> parts;
  parts.reserve(entries_.size());
  for (const auto& [idx, v] : entries_) parts.push_back(v);
  return Partition(std::move(parts));
}

bool canonical_less(const MPartition& a, const MPartition& b) {
  auto ia = a.entries().begin(), ib = b.entries().begin();
  for (; ia != a.entries().end() && ib != b.entries().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ib != b.entries().end();
}

std::vector<MPartition> enumerate_m_partitions(long long n, int m) {
  if (n < 1) throw std::invalid_argument("enumerate_m_partitions requires n >= 1");
  if (m < 1) throw std::invalid_argument("enumerate_m_partitions requires m >= 1");
  std::vector<MPartition> out;
  if (m == 1) {
    for (const Partition& p : enumerate_partitions(n))
      out.push_back(MPartition::from_partition(p));
    return out;
  }
  enum_arrays(m, n, nullptr,
              [&](const Arr& a) { out.emplace_back(m, a); });
  std::sort(out.begin(), out.end(),
            [](const MPartition& x, const MPartition& y) {
              return canonical_less(x, y);
            });
  return out;
}

std::optional<MPartition> mpartition_from_cells(
    int dim, const std::set<MPartition::Index>& cells) {
  if (cells.empty()) return std::nullopt;
  std::map<MPartition::Index, std::vector<int>> columns;
  for (const auto& cell : cells) {
    if (static_cast<int>(cell.size()) != dim + 1) return std::nullopt;
    MPartition::Index base(cell.begin(), cell.end() - 1);
    columns[std::move(base)].push_back(cell.back());
  }
  std::map<MPartition::Index, long long> entries;
  for (auto& [base, heights] : columns) {
    std::sort(heights.begin(), heights.end());
    // Column cells must fill 1..h without gaps.
    for (std::size_t a = 0; a < heights.size(); ++a)
      if (heights[a] != static_cast<int>(a) + 1) return std::nullopt;
    entries.emplace(base, static_cast<long long>(heights.size()));
  }
  try {
    return MPartition(dim, std::move(entries));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<MPartition> sigma_symmetric(const MPartition& p,
                                          const std::vector<int>& sigma) {
  const int arity = p.dim() + 1;
  if (static_cast<int>(sigma.size()) != arity)
    throw std::invalid_argument("permutation arity " +
                                std::to_string(sigma.size()) +
                                " does not match cell dimension " +
                                std::to_string(arity));
  std::vector<char> seen(static_cast<std::size_t>(arity), 0);
  for (int v : sigma) {
    if (v < 1 || v > arity || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(arity));
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
  std::set<MPartition::Index> permuted;
  for (const auto& cell : p.cells()) {
    MPartition::Index img(cell.size());
    for (std::size_t j = 0; j < cell.size(); ++j)
      img[static_cast<std::size_t>(sigma[j] - 1)] = cell[j];
    permuted.insert(std::move(img));
  }
  return mpartition_from_cells(p.dim(), permuted);
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> line(static_cast<std::size_t>(k));
  std::iota(line.begin(), line.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::string format_mpartition(const MPartition& p) {
  return format_arr(p.dim(), p.entries());
}

}  // namespace otpart
