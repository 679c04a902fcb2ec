#pragma once

#include <nlohmann/json.hpp>

#include "otpart/euler.hpp"
#include "otpart/measure.hpp"
#include "otpart/mpartition.hpp"
#include "otpart/plan.hpp"

namespace otpart {

/// {"dim": d, "atoms": [{"xy2": [doubled ints], "mass": "p/q"}]}
/// Round-trips bit-exactly (sorted atoms, canonical rationals).
nlohmann::json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

/// {"mode": "matching"|"coupling", "pairs": [[src,dst],...] or
///  "coupling": [["p/q",...],...], "cost": float,
///  "cost_exact": optional "p/q"}
nlohmann::json plan_to_json(const TransportPlan& plan);

/// {"dim": m, "entries": nested arrays, row-major}. Validation errors
/// carry the JSON path of the offending entry.
nlohmann::json mpartition_to_json(const MPartition& p);
MPartition mpartition_from_json(const nlohmann::json& j);
MPartition load_mpartition(const std::string& path);

/// {"blocks": [{"source": i, "parts": [...], "positions": [...]}]}
BlockMap blockmap_from_json(const nlohmann::json& j);
nlohmann::json blockmap_to_json(const BlockMap& b);

}  // namespace otpart
