#pragma once

#include <string>

#include "otpart/measure.hpp"
#include "otpart/partition.hpp"
#include "otpart/plan.hpp"

namespace otpart {

/// ASCII Ferrer board, one filled dot per point, origin bottom-left.
std::string render_ferrer(const Partition& p);

/// Support of a 2-dimensional measure on the half-integer grid.
std::string render_support(const DiscreteMeasure& mu);

/// Matching as one "(x, y) -> (x, y)" line per source atom.
std::string render_matching(const TransportPlan& plan);

}  // namespace otpart
