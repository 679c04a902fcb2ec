#include "otpart/io_json.hpp"

#include <fstream>
#include <stdexcept>

namespace otpart {

using nlohmann::json;

json measure_to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms())
    atoms.push_back({{"xy2", a.point.coords2}, {"mass", to_string(a.mass)}});
  return json{{"dim", mu.dim()}, {"atoms", atoms}};
}

DiscreteMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("atoms"))
    throw std::invalid_argument("measure JSON needs 'dim' and 'atoms'");
  const int dim = j.at("dim").get<int>();
  std::vector<Atom> atoms;
  for (const auto& ja : j.at("atoms")) {
    Atom a;
    a.point.coords2 = ja.at("xy2").get<std::vector<long long>>();
    a.mass = parse_rational(ja.at("mass").get<std::string>());
    atoms.push_back(std::move(a));
  }
  return DiscreteMeasure(dim, std::move(atoms));
}

json plan_to_json(const TransportPlan& plan) {
  json j;
  if (plan.mode == TransportPlan::Mode::Matching) {
    j["mode"] = "matching";
    json pairs = json::array();
    for (std::size_t i = 0; i < plan.matching.size(); ++i)
      pairs.push_back({static_cast<int>(i), plan.matching[i]});
    j["pairs"] = pairs;
  } else {
    j["mode"] = "coupling";
    json rows = json::array();
    for (const auto& row : plan.coupling) {
      json r = json::array();
      for (const Rational& v : row) r.push_back(to_string(v));
      rows.push_back(r);
    }
    j["coupling"] = rows;
  }
  j["cost"] = plan.cost;
  if (plan.cost_exact) j["cost_exact"] = to_string(*plan.cost_exact);
  return j;
}

namespace {

// Nested row-major arrays to 1-based index map; `path` tracks the JSON
// location for diagnostics.
void collect_entries(const json& node, int dim, MPartition::Index& prefix,
                     std::map<MPartition::Index, long long>& entries,
                     const std::string& path) {
  if (dim == 0) {
    if (!node.is_number_integer())
      throw std::invalid_argument("entries" + path + ": expected an integer");
    const long long v = node.get<long long>();
    if (v < 1)
      throw std::invalid_argument("entries" + path +
                                  ": entries must be positive");
    entries.emplace(prefix, v);
    return;
  }
  if (!node.is_array() || node.empty())
    throw std::invalid_argument("entries" + path + ": expected a nonempty array");
  for (std::size_t t = 0; t < node.size(); ++t) {
    prefix.push_back(static_cast<int>(t) + 1);
    collect_entries(node[t], dim - 1, prefix, entries,
                    path + "[" + std::to_string(t) + "]");
    prefix.pop_back();
  }
}

json entries_to_nested(const MPartition& p) {
  if (p.dim() == 1) {
    json arr = json::array();
    for (const auto& [idx, v] : p.entries()) arr.push_back(v);
    return arr;
  }
  json arr = json::array();
  for (int t = 1; t <= p.shape().front(); ++t) {
    std::map<MPartition::Index, long long> sub;
    for (const auto& [idx, v] : p.entries())
      if (idx.front() == t)
        sub.emplace(MPartition::Index(idx.begin() + 1, idx.end()), v);
    if (sub.empty()) break;
    arr.push_back(entries_to_nested(MPartition(p.dim() - 1, std::move(sub))));
  }
  return arr;
}

}  // namespace

json mpartition_to_json(const MPartition& p) {
  return json{{"dim", p.dim()}, {"entries", entries_to_nested(p)}};
}

MPartition mpartition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("partition JSON needs 'dim' and 'entries'");
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("'dim' must be >= 1");
  std::map<MPartition::Index, long long> entries;
  MPartition::Index prefix;
  collect_entries(j.at("entries"), dim, prefix, entries, "");
  return MPartition(dim, std::move(entries));
}

MPartition load_mpartition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte offset; surface it as the position.
    throw std::invalid_argument("parse error in '" + path + "': " + e.what());
  }
  return mpartition_from_json(j);
}

BlockMap blockmap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("blocks"))
    throw std::invalid_argument("block map JSON needs 'blocks'");
  BlockMap out;
  for (const auto& jb : j.at("blocks")) {
    BlockImage b;
    b.source_column = jb.at("source").get<int>();
    b.parts = jb.at("parts").get<std::vector<long long>>();
    b.positions = jb.at("positions").get<std::vector<int>>();
    out.blocks.push_back(std::move(b));
  }
  return out;
}

json blockmap_to_json(const BlockMap& b) {
  json blocks = json::array();
  for (const auto& block : b.blocks)
    blocks.push_back({{"source", block.source_column},
                      {"parts", block.parts},
                      {"positions", block.positions}});
  return json{{"blocks", blocks}};
}

}  // namespace otpart
