#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "otpart/genfun.hpp"
#include "otpart/mpartition.hpp"

using namespace otpart;

namespace {

MPartition from_rows(const std::vector<std::vector<long long>>& rows) {
  std::map<MPartition::Index, long long> entries;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      entries.emplace(
          MPartition::Index{static_cast<int>(i) + 1, static_cast<int>(j) + 1},
          rows[i][j]);
  return MPartition(2, std::move(entries));
}

}  // namespace

TEST_CASE("the displayed 2-dimensional partition of 4 validates") {
  const MPartition p = from_rows({{2, 1}, {1}});
  CHECK(p.total() == 4);
  CHECK(p.dim() == 2);
  CHECK_FALSE(p.is_full_box());
  CHECK(p.cells().size() == 4);
  CHECK(format_mpartition(p) == "[[2,1],[1]]");
}

TEST_CASE("m = 1 enumeration reduces to partitions") {
  const auto ms = enumerate_m_partitions(2, 1);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].as_partition() == Partition({2}));
  CHECK(ms[1].as_partition() == Partition({1, 1}));
}

TEST_CASE("2-dimensional enumeration matches the product oracle") {
  const long long expected[] = {0, 1, 3, 6, 13, 24, 48};
  for (long long n = 1; n <= 6; ++n) {
    const auto family = enumerate_m_partitions(n, 2);
    CHECK(static_cast<long long>(family.size()) == expected[n]);
    CHECK(static_cast<long long>(family.size()) ==
          count_by_generating_function(n, 2));
    std::set<std::string> seen;
    for (const auto& p : family) {
      CHECK(p.total() == n);
      CHECK(seen.insert(format_mpartition(p)).second);
    }
  }
  // The displayed partition of 4 is produced by the enumerator.
  bool found = false;
  for (const auto& p : enumerate_m_partitions(4, 2))
    if (p == from_rows({{2, 1}, {1}})) found = true;
  CHECK(found);
}

TEST_CASE("enumeration agrees with the lower-set oracle, any dimension") {
  // m-dimensional partitions of n are the lower sets of size n in
  // N^(m+1); the oracle grows lower sets directly.
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long long>(enumerate_m_partitions(n, 2).size()) ==
          oracle::count_lower_sets(3, n));
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(enumerate_m_partitions(n, 3).size()) ==
          oracle::count_lower_sets(4, n));
  for (int n = 1; n <= 9; ++n)
    CHECK(static_cast<long long>(enumerate_m_partitions(n, 1).size()) ==
          oracle::count_lower_sets(2, n));
}

TEST_CASE("validation rejects bad arrays") {
  // Gapped support (no (1,1) entry).
  std::map<MPartition::Index, long long> gapped{{{1, 2}, 1}, {{2, 1}, 1}};
  CHECK_THROWS_AS(MPartition(2, gapped), std::invalid_argument);
  // Entries increasing along an axis.
  std::map<MPartition::Index, long long> rising{{{1}, 1}, {{2}, 2}};
  CHECK_THROWS_AS(MPartition(1, rising), std::invalid_argument);
  // Nonpositive entry.
  std::map<MPartition::Index, long long> zero{{{1}, 0}};
  CHECK_THROWS_AS(MPartition(1, zero), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_m_partitions(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_m_partitions(3, 0), std::invalid_argument);
}

TEST_CASE("sigma_symmetric specializes to conjugation for m = 1") {
  for (long long n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const auto sym = sigma_symmetric(MPartition::from_partition(p), {2, 1});
      REQUIRE(sym.has_value());
      CHECK(sym->as_partition() == conjugate(p));
    }
}

TEST_CASE("sigma_symmetric identity and inverse round-trip") {
  for (long long n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_m_partitions(n, 2))
      for (const auto& sigma : all_permutations(3)) {
        const auto sym = sigma_symmetric(p, sigma);
        REQUIRE(sym.has_value());  // staircase supports never reject
        std::vector<int> inverse(sigma.size());
        for (std::size_t j = 0; j < sigma.size(); ++j)
          inverse[static_cast<std::size_t>(sigma[j] - 1)] =
              static_cast<int>(j) + 1;
        const auto back = sigma_symmetric(*sym, inverse);
        REQUIRE(back.has_value());
        CHECK(*back == p);
      }
  const MPartition p = from_rows({{2, 1}, {1}});
  CHECK(*sigma_symmetric(p, {1, 2, 3}) == p);
}

TEST_CASE("sigma_symmetric against an explicit cube permutation") {
  // 3-cycle on the axes of the displayed partition of 4.
  const MPartition p = from_rows({{2, 1}, {1}});
  const std::vector<int> sigma{2, 3, 1};
  std::set<MPartition::Index> expected;
  for (const auto& cell : p.cells()) {
    MPartition::Index img(3);
    for (std::size_t j = 0; j < 3; ++j)
      img[static_cast<std::size_t>(sigma[j] - 1)] = cell[j];
    expected.insert(img);
  }
  const auto sym = sigma_symmetric(p, sigma);
  REQUIRE(sym.has_value());
  std::set<MPartition::Index> got;
  for (const auto& cell : sym->cells()) got.insert(cell);
  CHECK(got == expected);
  CHECK(sym->total() == 4);
}

TEST_CASE("sigma_symmetric arity errors") {
  const MPartition p = from_rows({{1}});
  CHECK_THROWS_AS(sigma_symmetric(p, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sigma_symmetric(p, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("canonical order is deterministic and total") {
  const auto family = enumerate_m_partitions(5, 2);
  for (std::size_t i = 0; i + 1 < family.size(); ++i) {
    CHECK(canonical_less(family[i], family[i + 1]));
    CHECK_FALSE(canonical_less(family[i + 1], family[i]));
  }
}
