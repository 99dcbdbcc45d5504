#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "grm/error.hpp"
#include "grm/field.hpp"
#include "grm/linalg.hpp"
#include "grm/poly.hpp"

namespace grm {

/// Enumerating points of a flat is refused above this many points.
inline constexpr std::size_t kDefaultPointBudget = std::size_t{1} << 20;

/// An affine subspace of F_q^m stored as base point + direction vectors.
///
/// Directions are kept in reduced row echelon form and the base point is
/// reduced against them, so two flats describing the same point set have
/// identical members.
class AffineFlat {
 public:
  AffineFlat(const Field& field, Point base, std::vector<Point> directions)
      : field_(&Field::get(field.order())), base_(std::move(base)), directions_(std::move(directions)) {
    const std::size_t m = base_.size();
    for (auto v : base_)
      if (!field_->contains(v)) throw PreconditionError("base point coordinate is not a field element");
    for (const auto& d : directions_) {
      if (d.size() != m) throw PreconditionError("direction vector has the wrong length");
      for (auto v : d)
        if (!field_->contains(v)) throw PreconditionError("direction coordinate is not a field element");
    }
    const std::size_t given = directions_.size();
    pivots_ = linalg::rref(*field_, directions_);
    if (pivots_.size() != given) throw PreconditionError("flat directions are linearly dependent");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Elem c = base_[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < m; ++j) base_[j] = field_->sub(base_[j], field_->mul(c, directions_[r][j]));
    }
  }

  /// The whole space F_q^m.
  static AffineFlat whole_space(const Field& field, int m) {
    std::vector<Point> dirs;
    for (int i = 0; i < m; ++i) {
      Point e(static_cast<std::size_t>(m), 0);
      e[i] = 1;
      dirs.push_back(std::move(e));
    }
    return AffineFlat(field, Point(static_cast<std::size_t>(m), 0), std::move(dirs));
  }

  /// The coordinate flat {x_i = values[i] for i in axes}.
  static AffineFlat coordinate_flat(const Field& field, int m, std::span<const int> axes, std::span<const Elem> values) {
    Point base(static_cast<std::size_t>(m), 0);
    std::vector<bool> fixed(static_cast<std::size_t>(m), false);
    for (std::size_t i = 0; i < axes.size(); ++i) {
      base.at(static_cast<std::size_t>(axes[i])) = values[i];
      fixed.at(static_cast<std::size_t>(axes[i])) = true;
    }
    std::vector<Point> dirs;
    for (int i = 0; i < m; ++i) {
      if (fixed[static_cast<std::size_t>(i)]) continue;
      Point e(static_cast<std::size_t>(m), 0);
      e[i] = 1;
      dirs.push_back(std::move(e));
    }
    return AffineFlat(field, std::move(base), std::move(dirs));
  }

  const Field& field() const noexcept { return *field_; }
  int vars() const noexcept { return static_cast<int>(base_.size()); }
  int dim() const noexcept { return static_cast<int>(directions_.size()); }
  int codim() const noexcept { return vars() - dim(); }
  const Point& base() const noexcept { return base_; }
  const std::vector<Point>& directions() const noexcept { return directions_; }
  std::size_t size() const { return point_count(field_->order(), dim()); }

  /// Coordinates u with x = base + sum_i u_i * directions[i], if x is on the flat.
  std::optional<std::vector<Elem>> coordinates(std::span<const Elem> x) const {
    const Field& f = *field_;
    const std::size_t m = base_.size();
    Point diff(m);
    for (std::size_t j = 0; j < m; ++j) diff[j] = f.sub(x[j], base_[j]);
    std::vector<Elem> u(directions_.size());
    for (std::size_t r = 0; r < directions_.size(); ++r) u[r] = diff[pivots_[r]];
    for (std::size_t r = 0; r < directions_.size(); ++r)
      for (std::size_t j = 0; j < m; ++j) diff[j] = f.sub(diff[j], f.mul(u[r], directions_[r][j]));
    for (auto v : diff)
      if (v != 0) return std::nullopt;
    return u;
  }

  bool contains(std::span<const Elem> x) const { return coordinates(x).has_value(); }

  bool contains(const AffineFlat& other) const {
    if (!contains(other.base())) return false;
    for (const auto& d : other.directions()) {
      Point p = base_;
      for (std::size_t j = 0; j < p.size(); ++j) p[j] = field_->add(p[j], d[j]);
      if (!contains(p)) return false;
    }
    return true;
  }

  /// The point base + sum_i u_i * directions[i].
  Point point_from(std::span<const Elem> u) const {
    const Field& f = *field_;
    Point x = base_;
    for (std::size_t r = 0; r < directions_.size(); ++r)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.add(x[j], f.mul(u[r], directions_[r][j]));
    return x;
  }

  /// Point indices of the flat in the order of its local coordinates.
  std::vector<std::size_t> point_indices(std::size_t budget = kDefaultPointBudget) const {
    const int q = field_->order();
    const std::size_t n = size();
    if (n > budget)
      throw BudgetError("flat has " + std::to_string(n) + " points, above the enumeration budget of " + std::to_string(budget));
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(point_index(point_from(point_at(i, q, dim())), q));
    return out;
  }

  std::vector<Point> points(std::size_t budget = kDefaultPointBudget) const {
    std::vector<Point> out;
    const int q = field_->order();
    for (auto idx : point_indices(budget)) out.push_back(point_at(idx, q, vars()));
    return out;
  }

  /// Linear equations normals[i] . x = offsets[i] cutting out the flat.
  void equations(std::vector<Point>& normals, std::vector<Elem>& offsets) const {
    normals = linalg::nullspace(*field_, directions_, base_.size());
    offsets.clear();
    for (const auto& n : normals) offsets.push_back(linalg::dot(*field_, n, base_));
  }

  /// Direction space of this flat contains that of `other`.
  bool parallel_to(const AffineFlat& other) const {
    linalg::Mat rows = directions_;
    for (const auto& d : other.directions()) rows.push_back(d);
    return linalg::rank(*field_, rows) == directions_.size();
  }

  bool operator==(const AffineFlat& other) const {
    return field_ == other.field_ && base_ == other.base_ && directions_ == other.directions_;
  }

 private:
  const Field* field_;
  Point base_;
  std::vector<Point> directions_;
  std::vector<std::size_t> pivots_;
};

/// Smallest flat containing every given point, spanned by the differences
/// from the first point.
inline AffineFlat affine_hull(const Field& f, std::span<const Point> points) {
  if (points.empty()) throw PreconditionError("affine hull of an empty point set");
  const Point& base = points.front();
  linalg::Mat basis;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point d(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) d[j] = f.sub(points[i][j], base[j]);
    basis.push_back(std::move(d));
    if (basis.size() > base.size()) linalg::rref(f, basis);
  }
  linalg::rref(f, basis);
  return AffineFlat(f, base, std::move(basis));
}

inline AffineFlat affine_hull(const Field& f, int m, std::span<const std::size_t> indices) {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (auto idx : indices) pts.push_back(point_at(idx, f.order(), m));
  return affine_hull(f, pts);
}

/// Table that is 1 on the flat and 0 elsewhere.
inline FuncTable indicator(const AffineFlat& flat, std::size_t budget = kDefaultPointBudget) {
  FuncTable t(flat.field(), flat.vars());
  if (t.size() > budget)
    throw BudgetError("space has " + std::to_string(t.size()) + " points, above the enumeration budget");
  for (auto idx : flat.point_indices(budget)) t.set(idx, 1);
  return t;
}

// ---------------------------------------------------------------------------
// Affine maps

/// x -> matrix * x + translation with an invertible matrix.
class AffineMap {
 public:
  AffineMap(const Field& field, linalg::Mat matrix, Point translation)
      : field_(&Field::get(field.order())), matrix_(std::move(matrix)), translation_(std::move(translation)) {
    const std::size_t m = translation_.size();
    if (matrix_.size() != m) throw PreconditionError("affine map matrix has the wrong number of rows");
    for (const auto& row : matrix_)
      if (row.size() != m) throw PreconditionError("affine map matrix is not square");
    if (linalg::rank(*field_, matrix_) != m) throw PreconditionError("affine map matrix is singular");
  }

  static AffineMap identity(const Field& field, int m) {
    linalg::Mat a(static_cast<std::size_t>(m), linalg::Vec(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i) a[i][i] = 1;
    return AffineMap(field, std::move(a), Point(static_cast<std::size_t>(m), 0));
  }

  static AffineMap translation(const Field& field, Point shift) {
    AffineMap g = identity(field, static_cast<int>(shift.size()));
    g.translation_ = std::move(shift);
    return g;
  }

  /// A uniformly random invertible map drawn from rng (rejection sampling on
  /// the matrix). Uses rng() % q so the stream is identical across platforms.
  static AffineMap random(const Field& field, int m, std::mt19937_64& rng) {
    const auto q = static_cast<std::uint64_t>(field.order());
    const std::size_t n = static_cast<std::size_t>(m);
    for (;;) {
      linalg::Mat a(n, linalg::Vec(n));
      for (auto& row : a)
        for (auto& v : row) v = static_cast<Elem>(rng() % q);
      Point b(n);
      for (auto& v : b) v = static_cast<Elem>(rng() % q);
      if (linalg::rank(field, a) == n) return AffineMap(field, std::move(a), std::move(b));
    }
  }

  const Field& field() const noexcept { return *field_; }
  int vars() const noexcept { return static_cast<int>(translation_.size()); }
  const linalg::Mat& matrix() const noexcept { return matrix_; }
  const Point& translation() const noexcept { return translation_; }

  Point apply(std::span<const Elem> x) const {
    Point y = translation_;
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) y[i] = field_->add(y[i], field_->mul(matrix_[i][j], x[j]));
    return y;
  }

  AffineMap inverse() const {
    auto inv = linalg::inverse(*field_, matrix_);
    Point shift = linalg::mat_vec(*field_, *inv, translation_);
    for (auto& v : shift) v = field_->neg(v);
    return AffineMap(*field_, std::move(*inv), std::move(shift));
  }

 private:
  const Field* field_;
  linalg::Mat matrix_;
  Point translation_;
};

/// The table of t o g, i.e. x -> t(g(x)).
inline FuncTable apply_map(const FuncTable& t, const AffineMap& g) {
  if (g.vars() != t.vars()) throw PreconditionError("affine map and table have different dimensions");
  if (&g.field() != &t.field()) throw PreconditionError("affine map and table over different fields");
  const int q = t.order();
  FuncTable out(t.field(), t.vars());
  for (std::size_t i = 0; i < t.size(); ++i) out.set(i, t.at(g.apply(point_at(i, q, t.vars()))));
  return out;
}

/// Image of a flat under g.
inline AffineFlat map_flat(const AffineFlat& flat, const AffineMap& g) {
  const Field& f = flat.field();
  Point base = g.apply(flat.base());
  std::vector<Point> dirs;
  for (const auto& d : flat.directions()) dirs.push_back(linalg::mat_vec(f, g.matrix(), d));
  return AffineFlat(f, std::move(base), std::move(dirs));
}

// ---------------------------------------------------------------------------
// Hyperplanes inside a flat

/// Nonzero vectors of F_q^d whose first nonzero entry is 1, in index order.
/// These represent each hyperplane direction exactly once.
inline std::vector<Point> canonical_normals(int q, int d) {
  std::vector<Point> out;
  const std::size_t n = point_count(q, d);
  for (std::size_t i = 1; i < n; ++i) {
    Point v = point_at(i, q, d);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) out.push_back(std::move(v));
  }
  return out;
}

/// The codim-1 subflat {x in ambient : normal . u(x) = offset}, where u(x)
/// are the ambient flat's local coordinates.
struct HyperplaneWithin {
  AffineFlat ambient;
  Point normal;
  Elem offset = 0;

  bool contains(std::span<const Elem> x) const {
    auto u = ambient.coordinates(x);
    return u && linalg::dot(ambient.field(), normal, *u) == offset;
  }

  AffineFlat flat() const {
    const Field& f = ambient.field();
    const std::size_t d = normal.size();
    std::size_t lead = 0;
    while (normal[lead] == 0) ++lead;
    Point u0(d, 0);
    u0[lead] = f.mul(offset, f.inv(normal[lead]));
    std::vector<Point> dirs;
    for (const auto& k : linalg::nullspace(f, {normal}, d)) {
      Point img = ambient.point_from(k);
      for (std::size_t j = 0; j < img.size(); ++j) img[j] = f.sub(img[j], ambient.base()[j]);
      dirs.push_back(std::move(img));
    }
    return AffineFlat(f, ambient.point_from(u0), std::move(dirs));
  }
};

/// The q hyperplanes of an ambient flat sharing one direction; members[k]
/// has offset k.
struct ParallelClass {
  Point normal;
  std::vector<HyperplaneWithin> members;
};

/// All codim-1 subflats of `flat`, grouped into (q^d - 1)/(q - 1) parallel
/// classes of q hyperplanes each.
inline std::vector<ParallelClass> hyperplanes_within(const AffineFlat& flat) {
  if (flat.dim() < 1) throw PreconditionError("a 0-dimensional flat has no hyperplanes");
  const int q = flat.field().order();
  std::vector<ParallelClass> classes;
  for (auto& n : canonical_normals(q, flat.dim())) {
    ParallelClass cls{n, {}};
    for (int k = 0; k < q; ++k) cls.members.push_back(HyperplaneWithin{flat, n, static_cast<Elem>(k)});
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// #(S ∩ H) for each member H of the class, in member order. Points of S
/// outside the ambient flat are not counted.
inline std::vector<std::size_t> section_counts(std::span<const Point> points, const ParallelClass& cls) {
  std::vector<std::size_t> counts(cls.members.size(), 0);
  if (cls.members.empty()) return counts;
  const AffineFlat& ambient = cls.members.front().ambient;
  for (const auto& x : points) {
    auto u = ambient.coordinates(x);
    if (!u) continue;
    ++counts[linalg::dot(ambient.field(), cls.normal, *u)];
  }
  return counts;
}

inline std::string format_flat(const AffineFlat& flat) {
  std::string s = "base " + format_point(flat.base()) + " dirs [";
  for (std::size_t i = 0; i < flat.directions().size(); ++i) {
    if (i) s += ",";
    s += format_point(flat.directions()[i]);
  }
  return s + "]";
}

}  // namespace grm
