// Command-line front end: enumeration, distances, verification suites,
// and the sigma-symmetry evidence scan. Exit codes: 0 all checks pass,
// 1 a verification row failed, 2 usage or domain error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "otpart/euler.hpp"
#include "otpart/genfun.hpp"
#include "otpart/io_json.hpp"
#include "otpart/render.hpp"
#include "otpart/suites.hpp"
#include "otpart/transport.hpp"

using namespace otpart;

namespace {

struct RunConfig {
  long long n = 0;
  int m = 1;
  std::string cost = "euclidean";
  long long n_max = 0;
  std::string format;  // empty: the subcommand's default
  std::string out;
  std::uint64_t seed = 12345;
  std::string filter;
  bool count_only = false;
  bool render = false;
  std::string emit_plan;
  long long conjecture_n_cap = 8;
};

std::string fmt_cost_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Partition literal "a+b+c" or a JSON file path for m-dimensional input.
MPartition parse_partition_arg(const std::string& arg) {
  const bool literal =
      !arg.empty() &&
      arg.find_first_not_of("0123456789+") == std::string::npos;
  if (literal) return MPartition::from_partition(parse_partition(arg));
  return load_mpartition(arg);
}

std::string class_tags_of(const Partition& p) {
  std::string tags;
  for (PartitionClass c : classify(p)) {
    if (!tags.empty()) tags += ' ';
    tags += class_tag_name(c);
  }
  return tags.empty() ? "-" : tags;
}

void write_suite_json(const SuiteResult& r, std::ostream& os) {
  nlohmann::json j{{"suite", r.name},
                   {"params", r.params},
                   {"header", r.header},
                   {"rows", r.rows},
                   {"checks", r.checks},
                   {"failures", r.failures}};
  os << j.dump(2) << "\n";
}

int write_suite(const SuiteResult& suite, const RunConfig& cfg) {
  SuiteResult annotated = suite;
  annotated.params.insert(annotated.params.begin(),
                          "seed=" + std::to_string(cfg.seed));
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + cfg.out + "'");
    os = &file;
  }
  if (cfg.format == "json")
    write_suite_json(annotated, *os);
  else if (cfg.format == "text")
    *os << annotated.summary() << "\n";
  else
    annotated.write_csv(*os);
  if (!cfg.out.empty() || cfg.format != "text")
    std::cout << annotated.summary() << "\n";
  return suite.failures == 0 ? 0 : 1;
}

int cmd_enumerate(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "text";
  if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + cfg.out + "'");
    os = &file;
  }
  if (cfg.m == 1) {
    std::function<bool(const Partition&)> filter;
    if (!cfg.filter.empty()) {
      const PartitionClass tag = parse_class_tag(cfg.filter);
      filter = [tag](const Partition& p) { return has_class(p, tag); };
    }
    const auto partitions = enumerate_partitions(cfg.n, filter);
    if (cfg.count_only) {
      *os << partitions.size() << "\n";
      if (cfg.filter.empty()) {
        const long long oracle = count_by_generating_function(cfg.n, 1);
        if (oracle != static_cast<long long>(partitions.size())) {
          std::cerr << "count mismatch: enumerated " << partitions.size()
                    << " vs generating function " << oracle << "\n";
          return 1;
        }
      }
      return 0;
    }
    if (cfg.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : partitions)
        arr.push_back({{"partition", format_partition(p)},
                       {"tags", class_tags_of(p)}});
      *os << arr.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      *os << "partition,tags\n";
      for (const auto& p : partitions)
        *os << format_partition(p) << "," << class_tags_of(p) << "\n";
    } else {
      for (const auto& p : partitions)
        *os << format_partition(p) << "  [" << class_tags_of(p) << "]\n";
    }
    return 0;
  }
  const auto family = enumerate_m_partitions(cfg.n, cfg.m);
  if (cfg.count_only) {
    *os << family.size() << "\n";
    if (cfg.m == 2 && cfg.filter.empty()) {
      const long long oracle = count_by_generating_function(cfg.n, 2);
      if (oracle != static_cast<long long>(family.size())) {
        std::cerr << "count mismatch: enumerated " << family.size()
                  << " vs generating function " << oracle << "\n";
        return 1;
      }
    }
    return 0;
  }
  // Each object is flagged with the support convention it satisfies.
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : family) {
      auto j = mpartition_to_json(p);
      j["support"] = p.is_full_box() ? "full_box" : "staircase";
      arr.push_back(std::move(j));
    }
    *os << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    *os << "partition,support\n";
    for (const auto& p : family)
      *os << format_mpartition(p) << ","
          << (p.is_full_box() ? "full_box" : "staircase") << "\n";
  } else {
    for (const auto& p : family)
      *os << format_mpartition(p) << "  ["
          << (p.is_full_box() ? "full_box" : "staircase") << "]\n";
  }
  return 0;
}

int cmd_distance(const RunConfig& cfg, const std::string& minus_arg,
                 const std::string& plus_arg) {
  const MPartition minus = parse_partition_arg(minus_arg);
  const MPartition plus = parse_partition_arg(plus_arg);
  if (minus.total() != plus.total())
    throw std::invalid_argument(
        "partitions have different totals (" + std::to_string(minus.total()) +
        " vs " + std::to_string(plus.total()) +
        "); transport needs equal masses");
  const CostFunction cost = parse_cost(cfg.cost);
  const TransportPlan plan =
      solve_monge(delta_center(minus), delta_center(plus), cost);
  if (cfg.format == "json") {
    nlohmann::json j{{"cost", plan.cost}};
    if (plan.cost_exact) j["cost_exact"] = to_string(*plan.cost_exact);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << fmt_cost_value(plan.cost);
    if (plan.cost_exact)
      std::cout << " (exact " << to_string(*plan.cost_exact) << ")";
    std::cout << "\n";
  }
  if (!cfg.emit_plan.empty()) {
    std::ofstream os(cfg.emit_plan, std::ios::binary);
    if (!os)
      throw std::invalid_argument("cannot write '" + cfg.emit_plan + "'");
    os << plan_to_json(plan).dump(2) << "\n";
  }
  if (cfg.render) {
    if (minus.dim() == 1) {
      std::cout << render_ferrer(minus.as_partition()) << "\n"
                << render_ferrer(plus.as_partition()) << "\n";
    }
    std::cout << render_matching(plan);
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_name) {
  return write_suite(run_named_suite(suite_name, cfg.n_max, cfg.seed), cfg);
}

int cmd_conjecture(const RunConfig& cfg,
                   const std::vector<std::string>& cost_names) {
  if (cfg.m < 1 || cfg.m > 2)
    throw std::domain_error("--m must be 1 or 2");
  if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (cfg.n > cfg.conjecture_n_cap)
    throw std::domain_error("--n exceeds the scan cap of " +
                            std::to_string(cfg.conjecture_n_cap) +
                            " (raise --n-cap deliberately)");
  std::vector<CostFunction> costs;
  for (const auto& name : cost_names) costs.push_back(parse_cost(name));
  write_suite(suite_conjecture(cfg.n, cfg.m, costs), cfg);
  return 0;  // evidence scan: completion is success
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact optimal transport on integer partitions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string minus_arg, plus_arg, suite_name;
  std::vector<std::string> cost_names{"euclidean", "l1"};

  auto* enumerate = app.add_subcommand("enumerate", "list partitions of n");
  enumerate->add_option("--n", cfg.n, "total to partition")->required();
  enumerate->add_option("--m", cfg.m, "dimension (default 1)");
  enumerate->add_option("--filter", cfg.filter,
                        "all_odd | all_distinct | self_symmetric");
  enumerate->add_flag("--count-only", cfg.count_only,
                      "print the cardinality, cross-checked against the "
                      "generating function");
  enumerate->add_option("--format", cfg.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  enumerate->add_option("--out", cfg.out, "write to a file instead of stdout");

  auto* distance =
      app.add_subcommand("distance", "optimal transport cost between two "
                                     "partitions of the same total");
  distance->add_option("minus", minus_arg, "source partition ('3+1' or JSON path)")
      ->required();
  distance->add_option("plus", plus_arg, "target partition")->required();
  distance->add_option("--cost", cfg.cost,
                       "euclidean|l1|linf|sqeuclidean|power:P");
  distance->add_option("--emit-plan", cfg.emit_plan,
                       "write the transport plan JSON here");
  distance->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  distance->add_flag("--render", cfg.render,
                     "print Ferrer boards and the matching");

  auto* verify = app.add_subcommand("verify", "run a desk-scale suite");
  verify->add_option("suite", suite_name,
                     "idonspt|reflection|ccyclic|metric|allodd|alldistinct|"
                     "euler_bijection|euler_cost|projections")
      ->required();
  verify->add_option("--n-max", cfg.n_max, "override the suite bound");
  verify->add_option("--format", cfg.format, "csv | json | text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  verify->add_option("--out", cfg.out, "write the report here");
  verify->add_option("--seed", cfg.seed, "sampler seed (echoed in output)");

  auto* conjecture =
      app.add_subcommand("conjecture", "sigma-symmetry evidence scan");
  conjecture->add_option("--m", cfg.m, "dimension, 1 or 2")->required();
  conjecture->add_option("--n", cfg.n, "scan all totals up to n")->required();
  conjecture->add_option("--cost", cost_names, "metric-like costs to scan");
  conjecture->add_option("--n-cap", cfg.conjecture_n_cap,
                         "refusal threshold for --n");
  conjecture->add_option("--format", cfg.format, "csv | json | text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  conjecture->add_option("--out", cfg.out, "write the CSV here");
  conjecture->add_option("--seed", cfg.seed, "echoed in output headers");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (distance->parsed()) return cmd_distance(cfg, minus_arg, plus_arg);
    if (verify->parsed()) return cmd_verify(cfg, suite_name);
    if (conjecture->parsed()) return cmd_conjecture(cfg, cost_names);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
