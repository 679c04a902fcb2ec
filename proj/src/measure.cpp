#include "otpart/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace otpart {

LatticePoint grid_point(const std::vector<long long>& ints) {
  LatticePoint p;
  p.coords2.reserve(ints.size());
  for (long long v : ints) p.coords2.push_back(2 * v);
  return p;
}

LatticePoint cell_center(const std::vector<long long>& ints) {
  LatticePoint p;
  p.coords2.reserve(ints.size());
  for (long long v : ints) p.coords2.push_back(2 * v - 1);
  return p;
}

std::string format_point(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.coords2.size(); ++j) {
    if (j) out += ", ";
    const long long c2 = p.coords2[j];
    if (c2 % 2 == 0) {
      out += std::to_string(c2 / 2);
    } else {
      // halves are exact in decimal
      if (c2 < 0) out += '-';
      const long long abs2 = c2 < 0 ? -c2 : c2;
      out += std::to_string(abs2 / 2);
      out += ".5";
    }
  }
  out += ")";
  return out;
}

DiscreteMeasure::DiscreteMeasure(int dim, std::vector<Atom> atoms) : dim_(dim) {
  if (dim_ < 1) throw std::invalid_argument("measure dimension must be >= 1");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.point < b.point; });
  for (auto& a : atoms) {
    if (static_cast<int>(a.point.coords2.size()) != dim_)
      throw std::invalid_argument("atom dimension mismatch");
    if (!atoms_.empty() && atoms_.back().point == a.point)
      atoms_.back().mass += a.mass;
    else
      atoms_.push_back(std::move(a));
  }
  for (const Atom& a : atoms_)
    if (a.mass <= Rational(0))
      throw std::invalid_argument("atom masses must be positive");
}

Rational DiscreteMeasure::total() const {
  Rational t(0);
  for (const Atom& a : atoms_) t += a.mass;
  return t;
}

bool DiscreteMeasure::all_unit_masses() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.mass == Rational(1); });
}

std::vector<LatticePoint> DiscreteMeasure::support() const {
  std::vector<LatticePoint> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.point);
  return out;
}

bool DiscreteMeasure::contains(const LatticePoint& p) const {
  return std::binary_search(
      atoms_.begin(), atoms_.end(), Atom{p, Rational(1)},
      [](const Atom& a, const Atom& b) { return a.point < b.point; });
}

namespace {

DiscreteMeasure cells_to_measure(const MPartition& p, bool centers) {
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(p.total()));
  for (const auto& cell : p.cells()) {
    std::vector<long long> ints(cell.begin(), cell.end());
    atoms.push_back({centers ? cell_center(ints) : grid_point(ints), Rational(1)});
  }
  return DiscreteMeasure(p.dim() + 1, std::move(atoms));
}

}  // namespace

DiscreteMeasure delta_center(const MPartition& p) {
  return cells_to_measure(p, true);
}
DiscreteMeasure delta_center(const Partition& p) {
  return delta_center(MPartition::from_partition(p));
}
DiscreteMeasure delta_lattice(const MPartition& p) {
  return cells_to_measure(p, false);
}
DiscreteMeasure delta_lattice(const Partition& p) {
  return delta_lattice(MPartition::from_partition(p));
}

DiscreteMeasure delta_centered(const Partition& p) {
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(p.total()));
  for (int i = 1; i <= p.length(); ++i) {
    const long long ni = p.part(i);
    // floor(-n_i/2) for positive n_i
    const long long base = -((ni + 1) / 2);
    for (long long a = 1; a <= ni; ++a)
      atoms.push_back({grid_point({i, base + a}), Rational(1)});
  }
  return DiscreteMeasure(2, std::move(atoms));
}

DiscreteMeasure delta_permuted(const Partition& p,
                               const std::vector<int>& sigma) {
  const int k = p.length();
  if (static_cast<int>(sigma.size()) != k)
    throw std::invalid_argument("permutation arity " +
                                std::to_string(sigma.size()) +
                                " does not match length " + std::to_string(k));
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int v : sigma) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(k));
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(p.total()));
  for (int i = 1; i <= p.length(); ++i)
    for (long long a = 1; a <= p.part(i); ++a)
      atoms.push_back({grid_point({sigma[static_cast<std::size_t>(i - 1)], a}),
                       Rational(1)});
  return DiscreteMeasure(2, std::move(atoms));
}

DiscreteMeasure column_measure(const Partition& p, int i) {
  if (i < 1 || i > p.length())
    throw std::out_of_range("column index " + std::to_string(i) +
                            " outside 1.." + std::to_string(p.length()));
  std::vector<Atom> atoms;
  for (long long a = 1; a <= p.part(i); ++a)
    atoms.push_back({grid_point({i, a}), Rational(1)});
  return DiscreteMeasure(2, std::move(atoms));
}

DiscreteMeasure gu_measure(const Partition& p, int i) {
  if (i < 1 || i > p.length())
    throw std::out_of_range("column index " + std::to_string(i) +
                            " outside 1.." + std::to_string(p.length()));
  long long m = p.part(i);
  long long g = m & (-m);  // largest power of two dividing m
  long long u = m / g;
  std::vector<Atom> atoms;
  for (long long j1 = 1; j1 <= g; ++j1)
    for (long long j2 = 1; j2 <= u; ++j2)
      atoms.push_back({grid_point({j1, j2}), Rational(1)});
  return DiscreteMeasure(2, std::move(atoms));
}

DiscreteMeasure measure_of_generalized(const GeneralizedPartition& q) {
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(q.total()));
  for (int j = 1; j <= q.length(); ++j)
    for (long long a = 1; a <= q.parts()[static_cast<std::size_t>(j - 1)]; ++a)
      atoms.push_back({grid_point({j, a}), Rational(1)});
  return DiscreteMeasure(2, std::move(atoms));
}

DiscreteMeasure pushforward(const DiscreteMeasure& mu,
                            const std::vector<int>& keep_axes) {
  if (keep_axes.empty())
    throw std::invalid_argument("pushforward needs a nonempty axis set");
  for (int a : keep_axes)
    if (a < 1 || a > mu.dim())
      throw std::invalid_argument("axis " + std::to_string(a) +
                                  " outside 1.." + std::to_string(mu.dim()));
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) {
    LatticePoint img;
    img.coords2.reserve(keep_axes.size());
    for (int ax : keep_axes)
      img.coords2.push_back(a.point.coords2[static_cast<std::size_t>(ax - 1)]);
    atoms.push_back({std::move(img), a.mass});
  }
  return DiscreteMeasure(static_cast<int>(keep_axes.size()), std::move(atoms));
}

DiscreteMeasure map_points(
    const DiscreteMeasure& mu,
    const std::function<LatticePoint(const LatticePoint&)>& f) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) atoms.push_back({f(a.point), a.mass});
  return DiscreteMeasure(atoms.empty() ? mu.dim() : atoms.front().point.dim(),
                         std::move(atoms));
}

DiscreteMeasure reflect_axis(const DiscreteMeasure& mu, int axis) {
  if (axis < 1 || axis > mu.dim()) throw std::invalid_argument("bad axis");
  return map_points(mu, [axis](const LatticePoint& p) {
    LatticePoint q = p;
    q.coords2[static_cast<std::size_t>(axis - 1)] =
        -q.coords2[static_cast<std::size_t>(axis - 1)];
    return q;
  });
}

DiscreteMeasure permute_axes(const DiscreteMeasure& mu,
                             const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != mu.dim())
    throw std::invalid_argument("permutation arity mismatch");
  return map_points(mu, [&sigma](const LatticePoint& p) {
    LatticePoint q;
    q.coords2.resize(p.coords2.size());
    for (std::size_t j = 0; j < p.coords2.size(); ++j)
      q.coords2[static_cast<std::size_t>(sigma[j] - 1)] = p.coords2[j];
    return q;
  });
}

DiscreteMeasure translate(const DiscreteMeasure& mu,
                          const std::vector<long long>& delta2) {
  if (static_cast<int>(delta2.size()) != mu.dim())
    throw std::invalid_argument("translation arity mismatch");
  return map_points(mu, [&delta2](const LatticePoint& p) {
    LatticePoint q = p;
    for (std::size_t j = 0; j < q.coords2.size(); ++j) q.coords2[j] += delta2[j];
    return q;
  });
}

StairDensity::StairDensity(int dim, std::map<std::vector<int>, long long> pieces)
    : dim_(dim), pieces_(std::move(pieces)) {
  if (dim_ < 1) throw std::invalid_argument("density dimension must be >= 1");
  for (const auto& [idx, v] : pieces_) {
    if (static_cast<int>(idx.size()) != dim_)
      throw std::invalid_argument("cell index arity mismatch");
    if (v < 1) throw std::invalid_argument("density values must be positive");
    for (int a = 0; a < dim_; ++a) {
      if (idx[static_cast<std::size_t>(a)] == 1) continue;
      auto prev = idx;
      --prev[static_cast<std::size_t>(a)];
      auto it = pieces_.find(prev);
      if (it == pieces_.end() || it->second < v)
        throw std::invalid_argument("density is not monotone decreasing");
    }
  }
}

long long StairDensity::integral() const {
  long long t = 0;
  for (const auto& [idx, v] : pieces_) t += v;
  return t;
}

long long StairDensity::value_at(const std::vector<int>& index) const {
  auto it = pieces_.find(index);
  return it == pieces_.end() ? 0 : it->second;
}

StairDensity stair_density(const MPartition& p) {
  return StairDensity(p.dim(), p.entries());
}

StairDensity stair_density(const Partition& p) {
  return stair_density(MPartition::from_partition(p));
}

}  // namespace otpart
