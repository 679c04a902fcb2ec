#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otpart/measure.hpp"
#include "otpart/rational.hpp"

namespace otpart {

enum class CostKind { Euclidean, L1, Linf, SquaredEuclidean, Power, Table };

/// An evaluable cost c(x, y) on lattice points, tagged with whether it
/// is metric-like (nonnegative and zero exactly on the diagonal,
/// symmetric, triangle inequality). l1, linf and squared euclidean
/// evaluate exactly in rational arithmetic on the half-integer grid;
/// euclidean and fractional powers go through double.
class CostFunction {
 public:
  static CostFunction euclidean();
  static CostFunction l1();
  static CostFunction linf();
  static CostFunction squared_euclidean();
  /// |x-y|_2^p. Metric-like iff 0 < p <= 1 (concave power of a metric).
  static CostFunction power(double p);
  /// User-supplied table/closure cost. The metric_like claim can be
  /// audited with passes_metric_spot_check.
  static CostFunction table(
      std::function<double(const LatticePoint&, const LatticePoint&)> fn,
      bool metric_like, std::string name);

  double operator()(const LatticePoint& x, const LatticePoint& y) const;

  /// True for l1, linf, squared euclidean: exact() is available.
  bool exact_capable() const;
  Rational exact(const LatticePoint& x, const LatticePoint& y) const;

  bool metric_like() const { return metric_like_; }
  CostKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  CostFunction(CostKind kind, double exponent, bool metric_like,
               std::string name)
      : kind_(kind),
        exponent_(exponent),
        metric_like_(metric_like),
        name_(std::move(name)) {}

  CostKind kind_;
  double exponent_ = 1.0;
  bool metric_like_;
  std::string name_;
  std::function<double(const LatticePoint&, const LatticePoint&)> table_;
};

/// CLI spelling: euclidean | l1 | linf | sqeuclidean | power:P
CostFunction parse_cost(const std::string& spec);

/// Checks the three metric axioms on every (ordered) triple drawn from
/// the given points, within tol. Intended for auditing table costs.
bool passes_metric_spot_check(const CostFunction& c,
                              const std::vector<LatticePoint>& points,
                              double tol = 1e-12);

}  // namespace otpart
