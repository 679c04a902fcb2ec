#include <set>

#include "doctest.h"
#include "otpart/measure.hpp"
#include "otpart/partition.hpp"
#include "otpart/reconstruct.hpp"

using namespace otpart;

namespace {

std::set<std::vector<long long>> support_set(const DiscreteMeasure& mu) {
  std::set<std::vector<long long>> out;
  for (const auto& a : mu.atoms()) out.insert(a.point.coords2);
  return out;
}

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

TEST_CASE("delta_center by direct expansion") {
  const auto mu = delta_center(Partition({2, 1}));
  // centers (1/2,1/2), (1/2,3/2), (3/2,1/2); doubled coordinates
  CHECK(support_set(mu) ==
        std::set<std::vector<long long>>{{1, 1}, {1, 3}, {3, 1}});
  CHECK(mu.total() == Rational(3));
  CHECK(support_set(delta_center(Partition({1}))) ==
        std::set<std::vector<long long>>{{1, 1}});
}

TEST_CASE("delta_lattice by direct expansion") {
  const auto mu = delta_lattice(Partition({2, 1}));
  CHECK(support_set(mu) ==
        std::set<std::vector<long long>>{{2, 2}, {2, 4}, {4, 2}});
  const auto column = delta_lattice(Partition({3}));
  CHECK(support_set(column) ==
        std::set<std::vector<long long>>{{2, 2}, {2, 4}, {2, 6}});
}

TEST_CASE("support cardinality equals n, unit masses") {
  for (long long n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      for (const auto& mu : {delta_center(p), delta_lattice(p),
                             delta_centered(p)}) {
        CHECK(mu.size() == static_cast<std::size_t>(n));
        CHECK(mu.all_unit_masses());
        CHECK(mu.total() == Rational(n));
      }
    }
}

TEST_CASE("center and lattice differ by the half shift") {
  for (const auto& p : enumerate_partitions(6)) {
    const auto shifted = translate(delta_lattice(p), {-1, -1});
    CHECK(shifted == delta_center(p));
  }
}

TEST_CASE("delta_centered columns") {
  // odd columns symmetric about the axis, even ones not
  const auto odd = delta_centered(Partition({5, 5, 3, 1}));
  CHECK(reflect_axis(odd, 2) == odd);
  const auto mixed = delta_centered(Partition({5, 4, 3, 1}));
  CHECK_FALSE(reflect_axis(mixed, 2) == mixed);
  // column 2 of (5,4,3,1) occupies y in {-1,0,1,2}
  std::set<long long> ys;
  for (const auto& a : mixed.atoms())
    if (a.point.coords2[0] == 4) ys.insert(a.point.coords2[1] / 2);
  CHECK(ys == std::set<long long>{-1, 0, 1, 2});
  CHECK(support_set(delta_centered(Partition({1}))) ==
        std::set<std::vector<long long>>{{2, 0}});
}

TEST_CASE("delta_centered reflection invariance characterizes odd parts") {
  for (long long n = 1; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const auto mu = delta_centered(p);
      CHECK((reflect_axis(mu, 2) == mu) ==
            has_class(p, PartitionClass::AllOdd));
    }
}

TEST_CASE("delta_permuted") {
  CHECK(delta_permuted(Partition({2, 2}), {2, 1}) ==
        delta_lattice(Partition({2, 2})));
  const auto swapped = delta_permuted(Partition({2, 1}), {2, 1});
  CHECK(support_set(swapped) ==
        std::set<std::vector<long long>>{{4, 2}, {4, 4}, {2, 2}});
  CHECK_FALSE(swapped == delta_lattice(Partition({2, 1})));
  CHECK(delta_permuted(Partition({3, 2, 1}), {1, 2, 3}) ==
        delta_lattice(Partition({3, 2, 1})));
  CHECK_THROWS_AS(delta_permuted(Partition({2, 1}), {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(delta_permuted(Partition({2, 1}), {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("column and gu measures") {
  CHECK(support_set(column_measure(Partition({3, 2}), 2)) ==
        std::set<std::vector<long long>>{{4, 2}, {4, 4}});
  CHECK(support_set(column_measure(Partition({1}), 1)) ==
        std::set<std::vector<long long>>{{2, 2}});
  CHECK_THROWS_AS(column_measure(Partition({3, 2}), 3), std::out_of_range);

  // Columns decompose the lattice measure.
  const Partition p({4, 2, 1});
  std::vector<Atom> all;
  for (int i = 1; i <= p.length(); ++i) {
    const DiscreteMeasure column = column_measure(p, i);
    for (const auto& a : column.atoms()) all.push_back(a);
  }
  CHECK(DiscreteMeasure(2, all) == delta_lattice(p));

  const auto gu12 = gu_measure(Partition({12}), 1);
  CHECK(gu12.size() == 12);  // 4 x 3 rectangle
  std::set<long long> xs, ys;
  for (const auto& a : gu12.atoms()) {
    xs.insert(a.point.coords2[0] / 2);
    ys.insert(a.point.coords2[1] / 2);
  }
  CHECK(xs == std::set<long long>{1, 2, 3, 4});
  CHECK(ys == std::set<long long>{1, 2, 3});
  CHECK(gu_measure(Partition({1}), 1).size() == 1);
  const auto gu8 = gu_measure(Partition({8}), 1);
  CHECK(gu8.size() == 8);
  std::set<long long> ys8;
  for (const auto& a : gu8.atoms()) ys8.insert(a.point.coords2[1] / 2);
  CHECK(ys8 == std::set<long long>{1});  // 8 x 1
}

TEST_CASE("stair density") {
  const auto rho = stair_density(Partition({2, 1}));
  CHECK(rho.integral() == 3);
  CHECK(rho.value_at({1}) == 2);
  CHECK(rho.value_at({2}) == 1);
  CHECK(rho.value_at({3}) == 0);
  CHECK(stair_density(Partition({7})).integral() == 7);
  // Density equals the pushforward of the lattice measure onto the
  // index axes.
  for (long long n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_m_partitions(n, 2)) {
      const auto rho2 = stair_density(p);
      const auto proj = pushforward(delta_lattice(p), {1, 2});
      CHECK(proj.size() == rho2.pieces().size());
      for (const auto& a : proj.atoms()) {
        std::vector<int> idx;
        for (long long c2 : a.point.coords2)
          idx.push_back(static_cast<int>(c2 / 2));
        CHECK(a.mass == Rational(rho2.value_at(idx)));
      }
    }
}

TEST_CASE("pushforward") {
  const auto mu = delta_lattice(Partition({2, 1}));
  const auto px = pushforward(mu, {1});
  REQUIRE(px.size() == 2);
  CHECK(px.atoms()[0].point.coords2 == std::vector<long long>{2});
  CHECK(px.atoms()[0].mass == Rational(2));
  CHECK(px.atoms()[1].point.coords2 == std::vector<long long>{4});
  CHECK(px.atoms()[1].mass == Rational(1));
  CHECK(px.total() == mu.total());
  CHECK(pushforward(mu, {1, 2}) == mu);  // keep all axes
  CHECK_THROWS_AS(pushforward(mu, {}), std::invalid_argument);
  CHECK_THROWS_AS(pushforward(mu, {3}), std::invalid_argument);
}

TEST_CASE("atom merging and validation") {
  const DiscreteMeasure merged(
      1, {{grid_point({1}), Rational(1, 2)}, {grid_point({1}), Rational(1, 2)}});
  CHECK(merged.size() == 1);
  CHECK(merged.atoms()[0].mass == Rational(1));
  CHECK_THROWS_AS(DiscreteMeasure(1, {{grid_point({1}), Rational(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure(1, {{grid_point({1}), Rational(-1, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("reconstruction from both projections is unique up to n = 5") {
  for (long long n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_m_partitions(n, 2)) {
      const auto matches =
          reconstruct_from_projections(marginal_projections(p), n, 2);
      REQUIRE(matches.size() == 1);
      CHECK(matches.front() == p);
    }
}

TEST_CASE("row/column marginals stop determining the array at n = 6") {
  // Smallest colliding pair, found by exhaustive search.
  const MPartition a = from_rows({{3, 1}, {1, 1}});
  const MPartition b = from_rows({{2, 2}, {2}});
  CHECK(marginal_projections(a) == marginal_projections(b));
  const auto matches =
      reconstruct_from_projections(marginal_projections(a), 6, 2);
  REQUIRE(matches.size() == 2);
  CHECK(((matches[0] == a && matches[1] == b) ||
         (matches[0] == b && matches[1] == a)));
}

TEST_CASE("a single projection admits several partitions") {
  const MPartition row = from_rows({{1, 1}});
  const MPartition col = from_rows({{2}});
  const auto proj = marginal_projections(col);
  // Same keep-x1 marginal: mass 2 at x = 1.
  CHECK(marginal_projections(row).front() == proj.front());
  CHECK_FALSE(row == col);
}

TEST_CASE("reconstruction input validation") {
  const MPartition p = from_rows({{2, 1}, {1}});
  CHECK_THROWS_AS(reconstruct_from_projections({}, 4, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      reconstruct_from_projections({marginal_projections(p).front()}, 4, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_from_projections(marginal_projections(p), 5, 2),
                  std::invalid_argument);
}

TEST_CASE("point formatting") {
  CHECK(format_point(cell_center({1, 1})) == "(0.5, 0.5)");
  CHECK(format_point(grid_point({2, -1})) == "(2, -1)");
  LatticePoint p;
  p.coords2 = {-1, 3};
  CHECK(format_point(p) == "(-0.5, 1.5)");
}
