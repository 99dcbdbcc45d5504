#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grm/error.hpp"
#include "grm/field.hpp"
#include "grm/geometry.hpp"
#include "grm/poly.hpp"

namespace grm {

/// Decomposes r = t(q-1) + s with 0 <= s <= q-2; r = m(q-1) gives (m, 0).
inline std::pair<int, int> decompose_r(int q, int m, int r) {
  if (q < 2) throw PreconditionError("field order must be at least 2");
  if (m < 1) throw PreconditionError("number of variables must be at least 1");
  if (r < 0 || r > m * (q - 1))
    throw PreconditionError("order r = " + std::to_string(r) + " outside [0, m(q-1)] = [0, " + std::to_string(m * (q - 1)) + "]");
  if (r == m * (q - 1)) return {m, 0};
  return {r / (q - 1), r % (q - 1)};
}

/// Parameters of R_q(r, m): the functions of degree at most r.
struct CodeParams {
  int q = 0;
  int m = 0;
  int r = 0;
  int t = 0;
  int s = 0;

  static CodeParams make(int q, int m, int r) {
    if (!Field::supported(q))
      throw PreconditionError("unsupported field order " + std::to_string(q) + "; supported orders are " + Field::supported_orders());
    auto [t, s] = decompose_r(q, m, r);
    return CodeParams{q, m, r, t, s};
  }

  /// Same (q, m) with t and s given directly.
  static CodeParams from_ts(int q, int m, int t, int s) { return make(q, m, t * (q - 1) + s); }

  int max_degree() const noexcept { return m * (q - 1); }
  const Field& field() const { return Field::get(q); }
  std::string name() const {
    return "R_" + std::to_string(q) + "(" + std::to_string(r) + "," + std::to_string(m) + ")";
  }
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Minimum distance (q-s) q^(m-t-1); 1 for the full function space.
inline std::uint64_t min_weight(const CodeParams& p) {
  if (p.r == p.max_degree()) return 1;
  return static_cast<std::uint64_t>(p.q - p.s) * detail::ipow(static_cast<std::uint64_t>(p.q), p.m - p.t - 1);
}

/// Which closed form produced a second weight.
enum class Regime {
  None,           // r = 0: constants have a single nonzero weight
  FullSpace,      // r = m(q-1)
  LastVariable,   // t = m-1, 1 <= s <= q-2: q-s+1
  Affine,         // r = 1: q^m
  BelowQ,         // 2 <= r < q: (q-r+1)(q-1)q^(m-2)
  SZero,          // s = 0: 2(q-1)q^(m-t-1)
  SOneTernary,    // s = 1, q = 3: 8 * 3^(m-t-2)
  SOneFlat,       // s = 1, q >= 4: q^(m-t)
  SAtLeastTwo,    // 2 <= s <= q-2: (q-s+1)(q-1)q^(m-t-2)
};

inline std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::None: return "none";
    case Regime::FullSpace: return "full-space";
    case Regime::LastVariable: return "t-eq-m-minus-1";
    case Regime::Affine: return "r-eq-1";
    case Regime::BelowQ: return "r-below-q";
    case Regime::SZero: return "s-eq-0";
    case Regime::SOneTernary: return "s-eq-1-ternary";
    case Regime::SOneFlat: return "s-eq-1-flat";
    case Regime::SAtLeastTwo: return "s-ge-2";
  }
  return "none";
}

struct WeightReport {
  std::uint64_t w1 = 0;
  std::optional<std::uint64_t> w2;
  Regime regime = Regime::None;
};

struct RegimeValue {
  Regime regime;
  std::uint64_t w2;
};

/// Every closed form whose hypotheses formally hold at p, with its value.
/// Ranges are the widest under which each result is stated, so neighbouring
/// regimes overlap at their boundaries (e.g. r = q-1, t = 0 or t = m-1).
inline std::vector<RegimeValue> second_weight_candidates(const CodeParams& p) {
  const int q = p.q, m = p.m, r = p.r, t = p.t, s = p.s;
  const auto Q = static_cast<std::uint64_t>(q);
  std::vector<RegimeValue> out;
  if (q < 3 || r == 0) return out;
  if (r == p.max_degree()) out.push_back({Regime::FullSpace, 2});
  if (t == m - 1 && s >= 1 && s <= q - 2) out.push_back({Regime::LastVariable, static_cast<std::uint64_t>(q - s + 1)});
  if (r == 1) out.push_back({Regime::Affine, detail::ipow(Q, m)});
  if (m >= 2 && r >= 2 && r <= q - 1)
    out.push_back({Regime::BelowQ, static_cast<std::uint64_t>(q - r + 1) * (Q - 1) * detail::ipow(Q, m - 2)});
  if (s == 0 && t >= 1 && t <= m - 1) out.push_back({Regime::SZero, 2 * (Q - 1) * detail::ipow(Q, m - t - 1)});
  if (s == 1 && q == 3 && t >= 1 && t <= m - 2) out.push_back({Regime::SOneTernary, 8 * detail::ipow(3, m - t - 2)});
  if (s == 1 && q >= 4 && t >= 0 && t <= m - 1) out.push_back({Regime::SOneFlat, detail::ipow(Q, m - t)});
  if (s >= 2 && s <= q - 2 && t >= 0 && t <= m - 2)
    out.push_back({Regime::SAtLeastTwo, static_cast<std::uint64_t>(q - s + 1) * (Q - 1) * detail::ipow(Q, m - t - 2)});
  return out;
}

/// W1 and, for r >= 1, the second weight W2 with the regime that gave it.
/// Requires q >= 3: the binary case follows different formulas.
inline WeightReport second_weight(const CodeParams& p) {
  if (p.q < 3) throw PreconditionError("second weight formulas require q >= 3");
  const int q = p.q, m = p.m, r = p.r, t = p.t, s = p.s;
  const auto Q = static_cast<std::uint64_t>(q);
  WeightReport rep;
  rep.w1 = min_weight(p);
  if (r == 0) return rep;
  auto set = [&](Regime g, std::uint64_t w) {
    rep.regime = g;
    rep.w2 = w;
    return rep;
  };
  if (r == p.max_degree()) return set(Regime::FullSpace, 2);
  if (t == m - 1 && s >= 1) return set(Regime::LastVariable, static_cast<std::uint64_t>(q - s + 1));
  if (r == 1) return set(Regime::Affine, detail::ipow(Q, m));
  if (t == 0 && r >= 2) return set(Regime::BelowQ, static_cast<std::uint64_t>(q - r + 1) * (Q - 1) * detail::ipow(Q, m - 2));
  if (s == 0) return set(Regime::SZero, 2 * (Q - 1) * detail::ipow(Q, m - t - 1));
  if (s == 1) {
    if (q == 3) return set(Regime::SOneTernary, 8 * detail::ipow(3, m - t - 2));
    return set(Regime::SOneFlat, detail::ipow(Q, m - t));
  }
  return set(Regime::SAtLeastTwo, static_cast<std::uint64_t>(q - s + 1) * (Q - 1) * detail::ipow(Q, m - t - 2));
}

/// deg(t) <= r.
inline bool is_codeword(const FuncTable& t, int r) { return degree(t) <= r; }

// ---------------------------------------------------------------------------
// Constructors
//
// Each builds the canonical codeword on coordinate flats with 0-based axes;
// other members of the family are affine images of these.

namespace detail {

inline void require(bool ok, const CodeParams& p, const std::string& what) {
  if (!ok) throw PreconditionError("regime violation for " + p.name() + " (t=" + std::to_string(p.t) + ", s=" + std::to_string(p.s) + "): " + what);
}

// `count` distinct field elements: the given ones, or 0, 1, ... by default.
inline std::vector<Elem> pick_distinct(const Field& f, std::span<const Elem> given, int count, const std::string& what) {
  std::vector<Elem> out;
  if (given.empty()) {
    for (int i = 0; i < count; ++i) out.push_back(static_cast<Elem>(i));
    return out;
  }
  if (static_cast<int>(given.size()) != count)
    throw PreconditionError("expected " + std::to_string(count) + " " + what + ", got " + std::to_string(given.size()));
  std::set<Elem> seen;
  for (auto v : given) {
    if (!f.contains(v)) throw PreconditionError(what + " value " + std::to_string(v) + " is not a field element");
    if (!seen.insert(v).second) throw PreconditionError("repeated " + what + " value " + std::to_string(v));
    out.push_back(v);
  }
  return out;
}

// prod_{i < count} (1 - x_i^(q-1)): the indicator of x_0 = ... = x_{count-1} = 0.
inline FuncTable leading_indicator(const Field& f, int m, int count) {
  FuncTable t = FuncTable::constant(f, m, 1);
  for (int i = 0; i < count; ++i) t *= hyperplane_indicator(f, m, i, 0);
  return t;
}

// x_axis - a
inline FuncTable shifted_coordinate(const Field& f, int m, int axis, Elem a) {
  FuncTable t = coordinate(f, m, axis);
  for (auto& v : t.mutable_values()) v = f.sub(v, a);
  return t;
}

// x_a - lambda * x_b
inline FuncTable sloped_form(const Field& f, int m, int a, int b, Elem lambda) {
  std::vector<Elem> coeffs(static_cast<std::size_t>(m), 0);
  coeffs[static_cast<std::size_t>(a)] = 1;
  coeffs[static_cast<std::size_t>(b)] = f.neg(lambda);
  return affine_form(f, coeffs, 0);
}

}  // namespace detail

/// prod_{i<t}(1 - x_i^(q-1)) * prod_{j<s}(x_t - a_j): weight (q-s)q^(m-t-1).
inline FuncTable construct_min(const CodeParams& p, std::span<const Elem> roots = {},
                               const std::optional<AffineMap>& map = std::nullopt) {
  detail::require(p.r < p.max_degree(), p, "needs r < m(q-1)");
  const Field& f = p.field();
  const auto a = detail::pick_distinct(f, roots, p.s, "roots");
  FuncTable out = detail::leading_indicator(f, p.m, p.t);
  for (auto root : a) out *= detail::shifted_coordinate(f, p.m, p.t, root);
  return map ? apply_map(out, *map) : out;
}

/// Type A: prod_{i<t}(1 - x_i^(q-1)) * x_T * prod_{j<s-1}(x_t - a_j), with the
/// transversal axis T > t (default t+1). Support: q-s+1 parallel flats of
/// codim t+1 minus a transversal.
inline FuncTable construct_second_A(const CodeParams& p, std::span<const Elem> roots = {}, int transversal_axis = -1) {
  detail::require(p.q >= 4, p, "needs q >= 4");
  detail::require(p.s >= 2 && p.s <= p.q - 2, p, "needs 2 <= s <= q-2");
  detail::require(p.t >= 0 && p.t <= p.m - 2, p, "needs 0 <= t <= m-2");
  const int axis = transversal_axis < 0 ? p.t + 1 : transversal_axis;
  if (axis <= p.t || axis >= p.m) throw PreconditionError("transversal axis must lie in (t, m)");
  const Field& f = p.field();
  const auto a = detail::pick_distinct(f, roots, p.s - 1, "roots");
  FuncTable out = detail::leading_indicator(f, p.m, p.t);
  out *= coordinate(f, p.m, axis);
  for (auto root : a) out *= detail::shifted_coordinate(f, p.m, p.t, root);
  return out;
}

/// Type B: prod_{i<t}(1 - x_i^(q-1)) * prod_{j<s}(x_t - λ_j x_{t+1}). Support:
/// q-s+1 flats of codim t+1 through {x_t = x_{t+1} = 0} minus that flat.
inline FuncTable construct_second_B(const CodeParams& p, std::span<const Elem> slopes = {}) {
  detail::require(p.q >= 4, p, "needs q >= 4");
  detail::require(p.s >= 2 && p.s <= p.q - 2, p, "needs 2 <= s <= q-2");
  detail::require(p.t >= 0 && p.t <= p.m - 2, p, "needs 0 <= t <= m-2");
  const Field& f = p.field();
  const auto lambdas = detail::pick_distinct(f, slopes, p.s, "slopes");
  FuncTable out = detail::leading_indicator(f, p.m, p.t);
  for (auto l : lambdas) out *= detail::sloped_form(f, p.m, p.t, p.t + 1, l);
  return out;
}

enum class S0Variant { Parallel, Pencil };

/// s = 0 second weight codewords, weight 2(q-1)q^(m-t-1).
///   Parallel: prod_{i<t-1}(1 - x_i^(q-1)) * x_t * prod_{j<q-2}(x_{t-1} - a_j)
///   Pencil:   prod_{i<t-1}(1 - x_i^(q-1)) * prod_{j<q-1}(x_{t-1} - λ_j x_t)
inline FuncTable construct_second_s0(const CodeParams& p, S0Variant variant, std::span<const Elem> choices = {}) {
  detail::require(p.q >= 3, p, "needs q >= 3");
  detail::require(p.s == 0, p, "needs s = 0");
  detail::require(p.t >= 1 && p.t <= p.m - 1, p, "needs 1 <= t <= m-1");
  const Field& f = p.field();
  FuncTable out = detail::leading_indicator(f, p.m, p.t - 1);
  if (variant == S0Variant::Parallel) {
    out *= coordinate(f, p.m, p.t);
    for (auto root : detail::pick_distinct(f, choices, p.q - 2, "roots"))
      out *= detail::shifted_coordinate(f, p.m, p.t - 1, root);
  } else {
    for (auto l : detail::pick_distinct(f, choices, p.q - 1, "slopes"))
      out *= detail::sloped_form(f, p.m, p.t - 1, p.t, l);
  }
  return out;
}

/// s = 1, q >= 4: the indicator of the coordinate flat x_0 = ... = x_{t-1} = 0,
/// weight q^(m-t).
inline FuncTable construct_second_s1(const CodeParams& p) {
  detail::require(p.q != 3, p, "q = 3 has a different second weight; use the s1-q3 family");
  detail::require(p.q >= 4, p, "needs q >= 4");
  detail::require(p.s == 1, p, "needs s = 1");
  detail::require(p.t >= 0 && p.t <= p.m - 1, p, "needs 0 <= t <= m-1");
  return detail::leading_indicator(p.field(), p.m, p.t);
}

/// q = 3, s = 1: prod_{i<t-1}(1 - x_i^2) * (x_{t-1} - a) * x_t * x_{t+1},
/// weight 8 * 3^(m-t-2).
inline FuncTable construct_second_s1_q3(const CodeParams& p, Elem a = 0) {
  detail::require(p.q == 3, p, "needs q = 3");
  detail::require(p.s == 1, p, "needs s = 1");
  detail::require(p.t >= 1 && p.t <= p.m - 2, p, "needs 1 <= t <= m-2");
  const Field& f = p.field();
  if (!f.contains(a)) throw PreconditionError("root is not a field element");
  FuncTable out = detail::leading_indicator(f, p.m, p.t - 1);
  out *= detail::shifted_coordinate(f, p.m, p.t - 1, a);
  out *= coordinate(f, p.m, p.t);
  out *= coordinate(f, p.m, p.t + 1);
  return out;
}

/// t = m-1: prod_{i>=1}(1 - x_i^(q-1)) * prod_{j<s-1}(x_0 - a_j), weight q-s+1,
/// supported on the line x_1 = ... = x_{m-1} = 0.
inline FuncTable construct_tm1_second(const CodeParams& p, std::span<const Elem> roots = {}) {
  detail::require(p.q >= 3, p, "needs q >= 3");
  detail::require(p.t == p.m - 1, p, "needs t = m-1");
  detail::require(p.s >= 1 && p.s <= p.q - 2, p, "needs 1 <= s <= q-2");
  const Field& f = p.field();
  FuncTable out = FuncTable::constant(f, p.m, 1);
  for (int i = 1; i < p.m; ++i) out *= hyperplane_indicator(f, p.m, i, 0);
  for (auto root : detail::pick_distinct(f, roots, p.s - 1, "roots")) out *= detail::shifted_coordinate(f, p.m, 0, root);
  return out;
}

/// A combination of point masses with its degree certificates.
struct PointMassResult {
  FuncTable table;
  int degree = -1;
  bool sum_zero = false;     // sum of coefficients is 0
  bool moment_zero = false;  // sum of coefficients * points is the zero vector
  int certified_bound = 0;   // degree bound implied by the two moment conditions
  bool certified = false;    // degree <= certified_bound, checked by interpolation
};

/// f = sum_i coeffs[i] * 1_{points[i]}. A vanishing coefficient sum bounds
/// the degree by (m-1)(q-1)+q-2; a vanishing first moment as well lowers the
/// bound to (m-1)(q-1)+q-3.
inline PointMassResult construct_point_mass(const Field& field, std::span<const Point> points, std::span<const Elem> coeffs) {
  if (points.empty()) throw PreconditionError("point mass combination needs at least one point");
  if (points.size() != coeffs.size()) throw PreconditionError("points and coefficients differ in number");
  const Field& f = Field::get(field.order());
  const int q = f.order();
  const int m = static_cast<int>(points.front().size());
  std::set<std::size_t> seen;
  FuncTable table(f, m);
  Elem sum = 0;
  Point moment(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != m) throw PreconditionError("points have different dimensions");
    for (auto v : points[i])
      if (!f.contains(v)) throw PreconditionError("point coordinate is not a field element");
    if (!f.contains(coeffs[i]) || coeffs[i] == 0) throw PreconditionError("point mass coefficients must be nonzero field elements");
    const std::size_t idx = point_index(points[i], q);
    if (!seen.insert(idx).second) throw PreconditionError("repeated point " + format_point(points[i]), points[i]);
    table.set(idx, coeffs[i]);
    sum = f.add(sum, coeffs[i]);
    for (int j = 0; j < m; ++j) moment[j] = f.add(moment[j], f.mul(coeffs[i], points[i][j]));
  }
  PointMassResult res{std::move(table)};
  res.degree = degree(res.table);
  res.sum_zero = sum == 0;
  res.moment_zero = std::all_of(moment.begin(), moment.end(), [](Elem v) { return v == 0; });
  res.certified_bound = m * (q - 1);
  if (res.sum_zero) res.certified_bound = (m - 1) * (q - 1) + q - 2;
  if (res.sum_zero && res.moment_zero) res.certified_bound = (m - 1) * (q - 1) + q - 3;
  res.certified = res.degree <= res.certified_bound;
  return res;
}

// ---------------------------------------------------------------------------
// Families

enum class Family { Min, TypeA, TypeB, S0Parallel, S0Pencil, S1Flat, S1Ternary, LastVariable };

inline constexpr Family kAllFamilies[] = {Family::Min,       Family::TypeA,    Family::TypeB,     Family::S0Parallel,
                                          Family::S0Pencil,  Family::S1Flat,   Family::S1Ternary, Family::LastVariable};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Min: return "min";
    case Family::TypeA: return "A";
    case Family::TypeB: return "B";
    case Family::S0Parallel: return "s0-parallel";
    case Family::S0Pencil: return "s0-pencil";
    case Family::S1Flat: return "s1";
    case Family::S1Ternary: return "s1-q3";
    case Family::LastVariable: return "tm1";
  }
  return "min";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (auto f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

/// Whether the family's constructor accepts p.
inline bool family_applies(Family fam, const CodeParams& p) {
  const int q = p.q, m = p.m, t = p.t, s = p.s;
  if (q < 3) return false;
  switch (fam) {
    case Family::Min: return p.r < p.max_degree();
    case Family::TypeA:
    case Family::TypeB: return q >= 4 && s >= 2 && s <= q - 2 && t >= 0 && t <= m - 2;
    case Family::S0Parallel:
    case Family::S0Pencil: return s == 0 && t >= 1 && t <= m - 1;
    case Family::S1Flat: return q >= 4 && s == 1 && t >= 0 && t <= m - 1;
    case Family::S1Ternary: return q == 3 && s == 1 && t >= 1 && t <= m - 2;
    case Family::LastVariable: return t == m - 1 && s >= 1 && s <= q - 2;
  }
  return false;
}

/// Weight of every codeword the family's constructor produces at p.
inline std::uint64_t family_weight(Family fam, const CodeParams& p) {
  const auto Q = static_cast<std::uint64_t>(p.q);
  switch (fam) {
    case Family::Min: return min_weight(p);
    case Family::TypeA:
    case Family::TypeB: return static_cast<std::uint64_t>(p.q - p.s + 1) * (Q - 1) * detail::ipow(Q, p.m - p.t - 2);
    case Family::S0Parallel:
    case Family::S0Pencil: return 2 * (Q - 1) * detail::ipow(Q, p.m - p.t - 1);
    case Family::S1Flat: return detail::ipow(Q, p.m - p.t);
    case Family::S1Ternary: return 8 * detail::ipow(3, p.m - p.t - 2);
    case Family::LastVariable: return static_cast<std::uint64_t>(p.q - p.s + 1);
  }
  return 0;
}

/// Dispatches to the family's constructor; `choices` are its roots or slopes
/// (empty for defaults) and `map` an optional affine post-composition.
inline FuncTable construct(Family fam, const CodeParams& p, std::span<const Elem> choices = {},
                           const std::optional<AffineMap>& map = std::nullopt) {
  FuncTable out = [&] {
    switch (fam) {
      case Family::Min: return construct_min(p, choices);
      case Family::TypeA: return construct_second_A(p, choices);
      case Family::TypeB: return construct_second_B(p, choices);
      case Family::S0Parallel: return construct_second_s0(p, S0Variant::Parallel, choices);
      case Family::S0Pencil: return construct_second_s0(p, S0Variant::Pencil, choices);
      case Family::S1Flat:
        if (!choices.empty()) throw PreconditionError("family s1 takes no roots");
        return construct_second_s1(p);
      case Family::S1Ternary:
        if (choices.size() > 1) throw PreconditionError("family s1-q3 takes at most one root");
        return construct_second_s1_q3(p, choices.empty() ? Elem{0} : choices.front());
      case Family::LastVariable: return construct_tm1_second(p, choices);
    }
    throw PreconditionError("unknown family");
  }();
  return map ? apply_map(out, *map) : out;
}

}  // namespace grm
