#include <random>

#include "doctest.h"
#include "otpart/io_json.hpp"
#include "otpart/render.hpp"
#include "otpart/transport.hpp"

using namespace otpart;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2x"), std::invalid_argument);
}

TEST_CASE("measure JSON round trips bit-exactly") {
  // Seeded random measures with fractional masses and mixed coords.
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    std::vector<Atom> atoms;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < count; ++t) {
      LatticePoint pt;
      for (int a = 0; a < dim; ++a)
        pt.coords2.push_back(static_cast<long long>(rng() % 21) - 10);
      atoms.push_back(
          {pt, Rational(1 + static_cast<long long>(rng() % 5),
                        1 + static_cast<long long>(rng() % 4))});
    }
    const DiscreteMeasure mu(dim, atoms);
    const auto j = measure_to_json(mu);
    CHECK(measure_from_json(j) == mu);
    CHECK(measure_to_json(measure_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("measure JSON shape") {
  const auto j = measure_to_json(delta_center(Partition({2, 1})));
  CHECK(j.at("dim") == 2);
  CHECK(j.at("atoms").size() == 3);
  CHECK(j.at("atoms")[0].at("mass") == "1");
  CHECK_THROWS_AS(measure_from_json(nlohmann::json{{"dim", 2}}),
                  std::invalid_argument);
}

TEST_CASE("plan JSON") {
  const auto a = delta_center(Partition({2}));
  const auto b = delta_center(Partition({1, 1}));
  const auto plan = solve_monge(a, b, CostFunction::l1());
  const auto j = plan_to_json(plan);
  CHECK(j.at("mode") == "matching");
  CHECK(j.at("pairs").size() == 2);
  CHECK(j.contains("cost_exact"));

  const auto coupled = solve_kantorovich(a, b, CostFunction::l1());
  const auto jc = plan_to_json(coupled.plan);
  CHECK(jc.at("mode") == "coupling");
  CHECK(jc.at("coupling").size() == 2);
}

TEST_CASE("mpartition JSON") {
  const auto j = nlohmann::json::parse(R"({"dim":2,"entries":[[2,1],[1]]})");
  const MPartition p = mpartition_from_json(j);
  CHECK(p.total() == 4);
  CHECK(format_mpartition(p) == "[[2,1],[1]]");
  CHECK(mpartition_from_json(mpartition_to_json(p)) == p);

  const MPartition one_dim =
      mpartition_from_json(nlohmann::json::parse(R"({"dim":1,"entries":[3,1]})"));
  CHECK(one_dim.as_partition() == Partition({3, 1}));

  // Invariant violations carry the offending path.
  CHECK_THROWS_WITH_AS(mpartition_from_json(nlohmann::json::parse(
                           R"({"dim":2,"entries":[[1,2],[1]]})")),
                       doctest::Contains("axis"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(mpartition_from_json(nlohmann::json::parse(
                           R"({"dim":2,"entries":[[1,0]]})")),
                       doctest::Contains("[0][1]"), std::invalid_argument);
  CHECK_THROWS_AS(mpartition_from_json(nlohmann::json::parse(
                      R"({"dim":2,"entries":[[1],[2,1]]})")),
                  std::invalid_argument);
}

TEST_CASE("block map JSON") {
  const auto j = nlohmann::json::parse(
      R"({"blocks":[{"source":1,"parts":[3,1,1],"positions":[1,2,3]}]})");
  const BlockMap b = blockmap_from_json(j);
  REQUIRE(b.blocks.size() == 1);
  CHECK(b.blocks[0].parts == std::vector<long long>{3, 1, 1});
  CHECK(blockmap_from_json(blockmap_to_json(b)).blocks[0].positions ==
        b.blocks[0].positions);
}

TEST_CASE("ferrer rendering orientation") {
  // (2,1): two columns, origin bottom-left; the top row has one dot.
  const std::string board = render_ferrer(Partition({2, 1}));
  CHECK(board == "●\n● ●\n");
  const std::string single = render_ferrer(Partition({1}));
  CHECK(single == "●\n");
}

TEST_CASE("matching rendering lists coordinate pairs") {
  const auto a = delta_center(Partition({2}));
  const auto b = delta_center(Partition({1, 1}));
  const auto plan = solve_monge(a, b, CostFunction::euclidean());
  const std::string lines = render_matching(plan);
  CHECK(lines.find("(0.5, 0.5)") != std::string::npos);
  CHECK(lines.find(" -> ") != std::string::npos);
}
