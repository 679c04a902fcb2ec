#pragma once

#include <optional>
#include <vector>

#include "otpart/measure.hpp"
#include "otpart/rational.hpp"

namespace otpart {

/// Kantorovich dual potentials on the two supports, h-(x) + h+(y) <=
/// c(x,y), with equality on the support of an optimal coupling. Exact
/// vectors are filled only for exact-capable costs.
struct DualPotentials {
  std::vector<double> h_minus;
  std::vector<double> h_plus;
  double objective = 0.0;
  std::vector<Rational> h_minus_exact;
  std::vector<Rational> h_plus_exact;
  std::optional<Rational> objective_exact;
};

/// Either a Monge matching (bijection between equal-cardinality unit
/// supports) or a Kantorovich coupling (rational matrix with the two
/// measures as marginals), together with its total cost. The measures
/// are carried along so a plan is self-describing.
struct TransportPlan {
  enum class Mode { Matching, Coupling };

  Mode mode = Mode::Matching;
  DiscreteMeasure source;
  DiscreteMeasure target;
  /// Matching mode: matching[i] = index of the target atom receiving
  /// source atom i.
  std::vector<int> matching;
  /// Coupling mode: coupling[i][j] = mass moved from source atom i to
  /// target atom j. Row sums equal source masses, column sums target
  /// masses, exactly.
  std::vector<std::vector<Rational>> coupling;
  double cost = 0.0;
  std::optional<Rational> cost_exact;
};

/// Cost of an explicit matching under c (double path).
double matching_cost(const DiscreteMeasure& source,
                     const DiscreteMeasure& target,
                     const std::vector<int>& matching,
                     const class CostFunction& c);

}  // namespace otpart
