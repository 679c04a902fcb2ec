#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "otpart/mpartition.hpp"
#include "otpart/partition.hpp"
#include "otpart/rational.hpp"

namespace otpart {

/// A point of the half-integer grid in R^d, stored exactly as doubled
/// integers: coords2[j] = 2 * x_j. Cell centers have all-odd doubled
/// coordinates, lattice points all-even.
struct LatticePoint {
  std::vector<long long> coords2;

  int dim() const { return static_cast<int>(coords2.size()); }
  auto operator<=>(const LatticePoint&) const = default;
};

/// Point at integer coordinates.
LatticePoint grid_point(const std::vector<long long>& ints);
/// Point at (ints - 1/2) per coordinate, i.e. the center of the unit
/// cell whose upper corner is `ints`.
LatticePoint cell_center(const std::vector<long long>& ints);
std::string format_point(const LatticePoint& p);

struct Atom {
  LatticePoint point;
  Rational mass;

  bool operator==(const Atom&) const = default;
};

/// A finite weighted point set with positive rational masses and
/// pairwise-distinct points. Atoms are kept sorted by point, so equal
/// measures compare equal structurally. Construction merges coinciding
/// atoms by summing mass and rejects nonpositive results.
class DiscreteMeasure {
 public:
  DiscreteMeasure() : dim_(0) {}
  DiscreteMeasure(int dim, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  Rational total() const;
  bool all_unit_masses() const;
  std::vector<LatticePoint> support() const;
  bool contains(const LatticePoint& p) const;

  bool operator==(const DiscreteMeasure&) const = default;

 private:
  int dim_;
  std::vector<Atom> atoms_;  // sorted by point
};

/// delta_pi: unit atoms at the cell centers of the Young tableau,
/// in R^{m+1}. |support| = n.
DiscreteMeasure delta_center(const MPartition& p);
DiscreteMeasure delta_center(const Partition& p);

/// delta~_pi: unit atoms at the integer points (i1..im, a).
DiscreteMeasure delta_lattice(const MPartition& p);
DiscreteMeasure delta_lattice(const Partition& p);

/// delta^_pi: column i occupies y = floor(-n_i/2)+1 .. floor(-n_i/2)+n_i,
/// displaying the partition centered on the x-axis. Odd columns are
/// symmetric about y = 0, even columns are not.
DiscreteMeasure delta_centered(const Partition& p);

/// delta_pi^sigma: column i relocated to x = sigma(i). sigma is
/// 1-based one-line notation of arity k(p); identity recovers
/// delta_lattice(p). Throws on arity mismatch.
DiscreteMeasure delta_permuted(const Partition& p,
                               const std::vector<int>& sigma);

/// Column measure of column i (1-based): n_i unit atoms at (i,1..n_i).
DiscreteMeasure column_measure(const Partition& p, int i);

/// Odd-even prime decomposition measure of entry n_i: a g(n_i) x u(n_i)
/// rectangle of unit atoms at integer points.
DiscreteMeasure gu_measure(const Partition& p, int i);

/// Lattice-convention measure of a generalized partition: column j
/// (1-based position) carries parts[j] unit atoms.
DiscreteMeasure measure_of_generalized(const GeneralizedPartition& q);

/// Keep the listed 1-based axes, summing masses of coinciding images.
/// Total mass is preserved. Throws on an empty or out-of-range axis set.
DiscreteMeasure pushforward(const DiscreteMeasure& mu,
                            const std::vector<int>& keep_axes);

/// General pushforward under a point map; coinciding images merge.
DiscreteMeasure map_points(
    const DiscreteMeasure& mu,
    const std::function<LatticePoint(const LatticePoint&)>& f);

/// Negate the given 1-based coordinate.
DiscreteMeasure reflect_axis(const DiscreteMeasure& mu, int axis);
/// Permute coordinates: new coordinate sigma(j) = old coordinate j.
DiscreteMeasure permute_axes(const DiscreteMeasure& mu,
                             const std::vector<int>& sigma);
/// Translate every atom by delta2 (doubled units).
DiscreteMeasure translate(const DiscreteMeasure& mu,
                          const std::vector<long long>& delta2);

/// rho_pi: the stair density taking value n_{i1..im} on the half-open
/// unit cell ]i1-1,i1] x ... x ]im-1,im]. Integral equals n; monotone
/// decreasing along every axis.
class StairDensity {
 public:
  StairDensity(int dim, std::map<std::vector<int>, long long> pieces);

  int dim() const { return dim_; }
  const std::map<std::vector<int>, long long>& pieces() const {
    return pieces_;
  }
  /// Sum of piece values times unit cell volume.
  long long integral() const;
  /// Value at the cell indexed by the 1-based tuple (0 off support).
  long long value_at(const std::vector<int>& index) const;

  bool operator==(const StairDensity&) const = default;

 private:
  int dim_;
  std::map<std::vector<int>, long long> pieces_;
};

StairDensity stair_density(const MPartition& p);
StairDensity stair_density(const Partition& p);

}  // namespace otpart
