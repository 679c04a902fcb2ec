#include "otpart/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace otpart {

namespace {

void check_dims(const LatticePoint& x, const LatticePoint& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("cost arguments live in different dimensions");
}

long long sq_sum2(const LatticePoint& x, const LatticePoint& y) {
  long long s = 0;
  for (std::size_t j = 0; j < x.coords2.size(); ++j) {
    const long long d = x.coords2[j] - y.coords2[j];
    s += d * d;
  }
  return s;
}

}  // namespace

CostFunction CostFunction::euclidean() {
  return CostFunction(CostKind::Euclidean, 1.0, true, "euclidean");
}
CostFunction CostFunction::l1() {
  return CostFunction(CostKind::L1, 1.0, true, "l1");
}
CostFunction CostFunction::linf() {
  return CostFunction(CostKind::Linf, 1.0, true, "linf");
}
CostFunction CostFunction::squared_euclidean() {
  return CostFunction(CostKind::SquaredEuclidean, 2.0, false, "sqeuclidean");
}
CostFunction CostFunction::power(double p) {
  if (!(p > 0)) throw std::invalid_argument("power exponent must be positive");
  // Concave powers of a metric stay metric-like; p > 1 breaks the
  // triangle inequality.
  return CostFunction(CostKind::Power, p, p <= 1.0,
                      "power:" + std::to_string(p));
}
CostFunction CostFunction::table(
    std::function<double(const LatticePoint&, const LatticePoint&)> fn,
    bool metric_like, std::string name) {
  CostFunction c(CostKind::Table, 1.0, metric_like, std::move(name));
  c.table_ = std::move(fn);
  return c;
}

double CostFunction::operator()(const LatticePoint& x,
                                const LatticePoint& y) const {
  check_dims(x, y);
  switch (kind_) {
    case CostKind::Euclidean:
      return std::sqrt(static_cast<double>(sq_sum2(x, y))) / 2.0;
    case CostKind::L1: {
      long long s = 0;
      for (std::size_t j = 0; j < x.coords2.size(); ++j)
        s += std::llabs(x.coords2[j] - y.coords2[j]);
      return static_cast<double>(s) / 2.0;
    }
    case CostKind::Linf: {
      long long s = 0;
      for (std::size_t j = 0; j < x.coords2.size(); ++j)
        s = std::max(s, std::llabs(x.coords2[j] - y.coords2[j]));
      return static_cast<double>(s) / 2.0;
    }
    case CostKind::SquaredEuclidean:
      return static_cast<double>(sq_sum2(x, y)) / 4.0;
    case CostKind::Power:
      return std::pow(std::sqrt(static_cast<double>(sq_sum2(x, y))) / 2.0,
                      exponent_);
    case CostKind::Table:
      return table_(x, y);
  }
  return 0.0;
}

bool CostFunction::exact_capable() const {
  return kind_ == CostKind::L1 || kind_ == CostKind::Linf ||
         kind_ == CostKind::SquaredEuclidean;
}

Rational CostFunction::exact(const LatticePoint& x,
                             const LatticePoint& y) const {
  check_dims(x, y);
  switch (kind_) {
    case CostKind::L1: {
      long long s = 0;
      for (std::size_t j = 0; j < x.coords2.size(); ++j)
        s += std::llabs(x.coords2[j] - y.coords2[j]);
      return Rational(s, 2);
    }
    case CostKind::Linf: {
      long long s = 0;
      for (std::size_t j = 0; j < x.coords2.size(); ++j)
        s = std::max(s, std::llabs(x.coords2[j] - y.coords2[j]));
      return Rational(s, 2);
    }
    case CostKind::SquaredEuclidean:
      return Rational(sq_sum2(x, y), 4);
    default:
      throw std::logic_error("cost kind '" + name_ + "' has no exact value");
  }
}

CostFunction parse_cost(const std::string& spec) {
  if (spec == "euclidean") return CostFunction::euclidean();
  if (spec == "l1") return CostFunction::l1();
  if (spec == "linf") return CostFunction::linf();
  if (spec == "sqeuclidean") return CostFunction::squared_euclidean();
  if (spec.rfind("power:", 0) == 0) {
    try {
      return CostFunction::power(std::stod(spec.substr(6)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad power cost '" + spec + "'");
    }
  }
  throw std::invalid_argument(
      "unknown cost '" + spec +
      "' (expected euclidean|l1|linf|sqeuclidean|power:P)");
}

bool passes_metric_spot_check(const CostFunction& c,
                              const std::vector<LatticePoint>& points,
                              double tol) {
  for (const auto& x : points) {
    if (std::abs(c(x, x)) > tol) return false;
    for (const auto& y : points) {
      const double cxy = c(x, y);
      if (cxy < -tol) return false;
      if (!(x == y) && cxy <= tol) return false;
      if (std::abs(cxy - c(y, x)) > tol) return false;
      for (const auto& z : points)
        if (c(x, z) > cxy + c(y, z) + tol) return false;
    }
  }
  return true;
}

}  // namespace otpart
