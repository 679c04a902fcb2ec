#include "otpart/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace otpart {

std::vector<DiscreteMeasure> marginal_projections(const MPartition& p) {
  // Paper order: keep x1..x_{m-1} first, keep x2..x_m last.
  const DiscreteMeasure lattice = delta_lattice(p);
  std::vector<DiscreteMeasure> out;
  out.reserve(static_cast<std::size_t>(p.dim()));
  for (int forget = p.dim(); forget >= 1; --forget) {
    std::vector<int> keep;
    for (int a = 1; a <= p.dim(); ++a)
      if (a != forget) keep.push_back(a);
    out.push_back(pushforward(lattice, keep));
  }
  return out;
}

std::vector<MPartition> reconstruct_from_projections(
    const std::vector<DiscreteMeasure>& projections, long long n, int m) {
  if (projections.empty())
    throw std::invalid_argument("projection family is empty");
  if (m < 2)
    throw std::invalid_argument(
        "reconstruction needs m >= 2 (one marginal of a 1-dimensional "
        "partition is just its total)");
  if (static_cast<int>(projections.size()) != m)
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " projections, got " +
                                std::to_string(projections.size()));
  for (const DiscreteMeasure& proj : projections) {
    if (proj.dim() != m - 1)
      throw std::invalid_argument("each projection must live in dimension m-1");
    if (proj.total() != Rational(n))
      throw std::invalid_argument("projection total " + to_string(proj.total()) +
                                  " is inconsistent with n = " +
                                  std::to_string(n));
  }

  std::vector<MPartition> matches;
  for (const MPartition& candidate : enumerate_m_partitions(n, m))
    if (marginal_projections(candidate) == projections)
      matches.push_back(candidate);
  return matches;
}

}  // namespace otpart
