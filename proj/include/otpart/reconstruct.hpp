#pragma once

#include <vector>

#include "otpart/measure.hpp"
#include "otpart/mpartition.hpp"

namespace otpart {

/// The m coordinate-forgetting pushforward family of p: for each axis
/// j = 1..m, pushforward(delta_lattice(p), keep all index axes but j).
/// These are the coordinate marginals of the stair density.
std::vector<DiscreteMeasure> marginal_projections(const MPartition& p);

/// Exhaustively searches P_m(n) and returns every partition whose
/// marginal projection family matches, in canonical order. Requires
/// m >= 2 and exactly m projections; throws on inconsistent totals.
/// Row/column-sum tomography is not always unique: distinct members of
/// P_2(6) can share both marginals, so the result can have more than
/// one element even with the full family.
std::vector<MPartition> reconstruct_from_projections(
    const std::vector<DiscreteMeasure>& projections, long long n, int m);

}  // namespace otpart
