#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "grm/error.hpp"
#include "grm/field.hpp"

namespace grm {

/// A point of F_q^m, one element per coordinate.
using Point = std::vector<Elem>;

/// Number of points of F_q^m.
inline std::size_t point_count(int q, int m) {
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) n *= static_cast<std::size_t>(q);
  return n;
}

/// Point index convention: (x1, ..., xm) -> sum_i x_i * q^(i-1), x1 fastest.
inline std::size_t point_index(std::span<const Elem> x, int q) {
  std::size_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(q) + x[i];
  return idx;
}

inline Point point_at(std::size_t idx, int q, int m) {
  Point x(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    x[i] = static_cast<Elem>(idx % static_cast<std::size_t>(q));
    idx /= static_cast<std::size_t>(q);
  }
  return x;
}

inline std::string format_point(std::span<const Elem> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// ReducedPoly

/// Exponent vector of a monomial; every exponent is at most q-1.
using Monomial = std::vector<std::uint8_t>;

inline int total_degree(const Monomial& mono) {
  int d = 0;
  for (auto e : mono) d += e;
  return d;
}

/// A polynomial in m variables over GF(q) in reduced form: the degree in
/// every variable is at most q-1 and no zero coefficient is stored.
class ReducedPoly {
 public:
  ReducedPoly(const Field& field, int m) : field_(&Field::get(field.order())), m_(m) {
    if (m < 0) throw PreconditionError("number of variables must be non-negative");
  }

  static ReducedPoly constant(const Field& field, int m, Elem c) {
    ReducedPoly p(field, m);
    p.add_term(Monomial(static_cast<std::size_t>(m), 0), c);
    return p;
  }

  /// The polynomial x_axis (0-based axis).
  static ReducedPoly variable(const Field& field, int m, int axis) {
    ReducedPoly p(field, m);
    Monomial mono(static_cast<std::size_t>(m), 0);
    mono.at(static_cast<std::size_t>(axis)) = 1;
    p.add_term(mono, 1);
    return p;
  }

  const Field& field() const noexcept { return *field_; }
  int vars() const noexcept { return m_; }
  const std::map<Monomial, Elem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * mono to the polynomial. Exponents must already be reduced.
  void add_term(const Monomial& mono, Elem c) {
    if (mono.size() != static_cast<std::size_t>(m_))
      throw PreconditionError("monomial has " + std::to_string(mono.size()) + " exponents, expected " +
                              std::to_string(m_));
    for (auto e : mono)
      if (e > field_->order() - 1) throw PreconditionError("monomial exponent exceeds q-1");
    if (!field_->contains(c)) throw PreconditionError("coefficient is not a field element");
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, c);
      return;
    }
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Elem coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Elem{0} : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, total_degree(mono));
    return d;
  }

  /// Exponent reduction for x^q = x on F_q: e >= q maps to ((e-1) mod (q-1)) + 1.
  static int reduce_exponent(int e, int q) { return e >= q ? ((e - 1) % (q - 1)) + 1 : e; }

  friend ReducedPoly operator+(const ReducedPoly& a, const ReducedPoly& b) {
    a.check_compatible(b);
    ReducedPoly r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
    return r;
  }

  friend ReducedPoly operator-(const ReducedPoly& a, const ReducedPoly& b) {
    a.check_compatible(b);
    ReducedPoly r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, a.field_->neg(c));
    return r;
  }

  friend ReducedPoly operator*(const ReducedPoly& a, const ReducedPoly& b) {
    a.check_compatible(b);
    const Field& f = *a.field_;
    ReducedPoly r(f, a.m_);
    Monomial mono(static_cast<std::size_t>(a.m_));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < mono.size(); ++i)
          mono[i] = static_cast<std::uint8_t>(reduce_exponent(ma[i] + mb[i], f.order()));
        r.add_term(mono, f.mul(ca, cb));
      }
    }
    return r;
  }

  ReducedPoly scaled(Elem c) const {
    ReducedPoly r(*field_, m_);
    for (const auto& [mono, coeff] : terms_) r.add_term(mono, field_->mul(c, coeff));
    return r;
  }

  bool operator==(const ReducedPoly& other) const {
    return field_ == other.field_ && m_ == other.m_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const ReducedPoly& other) const {
    if (field_ != other.field_ || m_ != other.m_)
      throw PreconditionError("polynomials over different rings");
  }

  const Field* field_;
  int m_;
  std::map<Monomial, Elem> terms_;
};

// ---------------------------------------------------------------------------
// FuncTable

/// The value table of a function F_q^m -> F_q, indexed by the point index
/// convention above. This is the canonical codeword representation.
class FuncTable {
 public:
  FuncTable(const Field& field, int m)
      : field_(&Field::get(field.order())), m_(m), values_(point_count(field.order(), m), 0) {
    if (m < 0) throw PreconditionError("number of variables must be non-negative");
  }

  FuncTable(const Field& field, int m, std::vector<Elem> values)
      : field_(&Field::get(field.order())), m_(m), values_(std::move(values)) {
    if (m < 0) throw PreconditionError("number of variables must be non-negative");
    if (values_.size() != point_count(field_->order(), m))
      throw PreconditionError("table has " + std::to_string(values_.size()) + " entries, expected q^m = " +
                              std::to_string(point_count(field_->order(), m)));
    for (auto v : values_)
      if (!field_->contains(v)) throw PreconditionError("table entry " + std::to_string(v) + " is not a field element");
  }

  static FuncTable constant(const Field& field, int m, Elem c) {
    return FuncTable(field, m, std::vector<Elem>(point_count(field.order(), m), c));
  }

  const Field& field() const noexcept { return *field_; }
  int order() const noexcept { return field_->order(); }
  int vars() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }

  Elem operator[](std::size_t idx) const { return values_[idx]; }
  void set(std::size_t idx, Elem v) { values_.at(idx) = v; }
  Elem at(std::span<const Elem> x) const { return values_.at(point_index(x, field_->order())); }

  std::span<const Elem> values() const noexcept { return values_; }
  std::vector<Elem>& mutable_values() noexcept { return values_; }

  bool same_space(const FuncTable& other) const noexcept { return field_ == other.field_ && m_ == other.m_; }

  bool operator==(const FuncTable& other) const {
    return same_space(other) && values_ == other.values_;
  }

  FuncTable& operator+=(const FuncTable& other) { return combine(other, [this](Elem a, Elem b) { return field_->add(a, b); }); }
  FuncTable& operator-=(const FuncTable& other) { return combine(other, [this](Elem a, Elem b) { return field_->sub(a, b); }); }
  FuncTable& operator*=(const FuncTable& other) { return combine(other, [this](Elem a, Elem b) { return field_->mul(a, b); }); }

  FuncTable scaled(Elem c) const {
    FuncTable r = *this;
    for (auto& v : r.values_) v = field_->mul(c, v);
    return r;
  }

  friend FuncTable operator+(FuncTable a, const FuncTable& b) { return a += b; }
  friend FuncTable operator-(FuncTable a, const FuncTable& b) { return a -= b; }
  friend FuncTable operator*(FuncTable a, const FuncTable& b) { return a *= b; }

 private:
  template <class Op>
  FuncTable& combine(const FuncTable& other, Op op) {
    if (!same_space(other)) throw PreconditionError("tables over different spaces");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = op(values_[i], other.values_[i]);
    return *this;
  }

  const Field* field_;
  int m_;
  std::vector<Elem> values_;
};

// ---------------------------------------------------------------------------
// Building blocks

/// The table of x_axis.
inline FuncTable coordinate(const Field& f, int m, int axis) {
  FuncTable t(f, m);
  const int q = f.order();
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, point_at(i, q, m).at(static_cast<std::size_t>(axis)));
  return t;
}

/// The table of sum_i coeffs[i] * x_i + constant.
inline FuncTable affine_form(const Field& f, std::span<const Elem> coeffs, Elem constant) {
  const int m = static_cast<int>(coeffs.size());
  FuncTable t(f, m);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point x = point_at(i, f.order(), m);
    Elem v = constant;
    for (int j = 0; j < m; ++j) v = f.add(v, f.mul(coeffs[j], x[j]));
    t.set(i, v);
  }
  return t;
}

/// The table of 1 - (x_axis - a)^(q-1), i.e. the indicator of {x_axis = a}.
inline FuncTable hyperplane_indicator(const Field& f, int m, int axis, Elem a) {
  FuncTable t(f, m);
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, point_at(i, f.order(), m).at(static_cast<std::size_t>(axis)) == a ? 1 : 0);
  return t;
}

/// The point mass 1_w.
inline FuncTable point_indicator(const Field& f, std::span<const Elem> w) {
  FuncTable t(f, static_cast<int>(w.size()));
  t.set(point_index(w, f.order()), 1);
  return t;
}

// ---------------------------------------------------------------------------
// Evaluation and interpolation

namespace detail {

// Row k of the result holds the coefficients of X^k in the univariate
// interpolant: coeff[k] = sum_a M[k][a] * f(a), obtained by expanding
// 1 - (X - a)^(q-1) for every a.
inline std::vector<Elem> univariate_interpolation_matrix(const Field& f) {
  const int q = f.order();
  std::vector<Elem> mat(static_cast<std::size_t>(q * q), 0);
  for (int a = 0; a < q; ++a) {
    std::vector<Elem> poly{1};
    const Elem root = f.neg(static_cast<Elem>(a));
    for (int k = 0; k < q - 1; ++k) {
      std::vector<Elem> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] = f.add(next[i], f.mul(poly[i], root));
        next[i + 1] = f.add(next[i + 1], poly[i]);
      }
      poly = std::move(next);
    }
    for (int k = 0; k < q; ++k) {
      Elem c = f.neg(poly[static_cast<std::size_t>(k)]);
      if (k == 0) c = f.add(c, 1);
      mat[static_cast<std::size_t>(k * q + a)] = c;
    }
  }
  return mat;
}

// Applies a q x q matrix along every axis of a q^m tensor laid out in the
// point index convention.
inline void apply_along_axes(const Field& f, int m, std::span<const Elem> mat, std::vector<Elem>& data) {
  const std::size_t q = static_cast<std::size_t>(f.order());
  std::vector<Elem> line(q), out(q);
  std::size_t stride = 1;
  for (int axis = 0; axis < m; ++axis) {
    const std::size_t block = stride * q;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t a = 0; a < q; ++a) line[a] = data[base + off + a * stride];
        for (std::size_t k = 0; k < q; ++k) {
          Elem acc = 0;
          for (std::size_t a = 0; a < q; ++a) acc = f.add(acc, f.mul(mat[k * q + a], line[a]));
          out[k] = acc;
        }
        for (std::size_t k = 0; k < q; ++k) data[base + off + k * stride] = out[k];
      }
    }
    stride = block;
  }
}

inline std::vector<Elem> evaluation_matrix(const Field& f) {
  const int q = f.order();
  std::vector<Elem> mat(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a)
    for (int k = 0; k < q; ++k) mat[static_cast<std::size_t>(a * q + k)] = f.pow(static_cast<Elem>(a), k);
  return mat;
}

inline Monomial exponents_at(std::size_t idx, int q, int m) {
  Monomial e(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    e[i] = static_cast<std::uint8_t>(idx % static_cast<std::size_t>(q));
    idx /= static_cast<std::size_t>(q);
  }
  return e;
}

}  // namespace detail

/// Dense coefficients of the reduced form, indexed like points: the entry at
/// index sum_i e_i q^(i-1) is the coefficient of x1^e1 ... xm^em.
inline std::vector<Elem> dense_coefficients(const FuncTable& t) {
  std::vector<Elem> data(t.values().begin(), t.values().end());
  detail::apply_along_axes(t.field(), t.vars(), detail::univariate_interpolation_matrix(t.field()), data);
  return data;
}

/// Pointwise evaluation of p at every point of F_q^m.
inline FuncTable to_table(const ReducedPoly& p) {
  const Field& f = p.field();
  const int q = f.order();
  std::vector<Elem> data(point_count(q, p.vars()), 0);
  for (const auto& [mono, c] : p.terms()) {
    std::size_t idx = 0;
    for (std::size_t i = mono.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(q) + mono[i];
    data[idx] = c;
  }
  detail::apply_along_axes(f, p.vars(), detail::evaluation_matrix(f), data);
  return FuncTable(f, p.vars(), std::move(data));
}

/// The unique reduced form P with to_table(P) = t.
inline ReducedPoly interpolate(const FuncTable& t) {
  const auto coeffs = dense_coefficients(t);
  ReducedPoly p(t.field(), t.vars());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_term(detail::exponents_at(i, t.order(), t.vars()), coeffs[i]);
  return p;
}

/// Total degree of the reduced form; -1 for the zero function.
inline int degree(const FuncTable& t) {
  const auto coeffs = dense_coefficients(t);
  const int q = t.order();
  int best = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    int d = 0;
    for (std::size_t idx = i; idx; idx /= static_cast<std::size_t>(q)) d += static_cast<int>(idx % static_cast<std::size_t>(q));
    best = std::max(best, d);
  }
  return best;
}

/// Degree of the reduced form in the single variable x_axis; -1 for zero.
inline int degree_in(const FuncTable& t, int axis) {
  const auto coeffs = dense_coefficients(t);
  const int q = t.order();
  int best = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) best = std::max(best, static_cast<int>(detail::exponents_at(i, q, t.vars())[static_cast<std::size_t>(axis)]));
  return best;
}

/// Hamming weight: number of points where t is nonzero.
inline std::size_t weight(const FuncTable& t) {
  return static_cast<std::size_t>(std::count_if(t.values().begin(), t.values().end(), [](Elem v) { return v != 0; }));
}

/// Point indices of the support, ascending.
inline std::vector<std::size_t> support(const FuncTable& t) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) s.push_back(i);
  return s;
}

// ---------------------------------------------------------------------------
// Linear-factor division

namespace detail {

inline void check_axis(const FuncTable& t, int axis) {
  if (axis < 0 || axis >= t.vars())
    throw PreconditionError("axis " + std::to_string(axis) + " out of range for " + std::to_string(t.vars()) + " variables");
}

}  // namespace detail

/// Returns g with t = (x_axis - a) * g pointwise and deg_{x_axis}(g) <=
/// deg_{x_axis}(t) - 1. Requires t to vanish on the hyperplane x_axis = a.
inline FuncTable divide_linear(const FuncTable& t, int axis, Elem a) {
  detail::check_axis(t, axis);
  const Field& f = t.field();
  if (!f.contains(a)) throw PreconditionError("root is not a field element");
  const std::size_t q = static_cast<std::size_t>(f.order());
  const int m = t.vars();

  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point x = point_at(i, f.order(), m);
    if (x[static_cast<std::size_t>(axis)] == a && t[i] != 0)
      throw PreconditionError("function does not vanish on x" + std::to_string(axis + 1) + " = " + std::to_string(a) +
                                  ": value " + std::to_string(t[i]) + " at " + format_point(x),
                              x);
  }

  const auto interp = detail::univariate_interpolation_matrix(f);
  std::size_t stride = 1;
  for (int i = 0; i < axis; ++i) stride *= q;
  const std::size_t block = stride * q;

  FuncTable g(f, m);
  std::vector<Elem> coeff(q), quot(q);
  for (std::size_t base = 0; base < t.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (std::size_t k = 0; k < q; ++k) {
        Elem acc = 0;
        for (std::size_t x = 0; x < q; ++x) acc = f.add(acc, f.mul(interp[k * q + x], t[base + off + x * stride]));
        coeff[k] = acc;
      }
      // Synthetic division by (X - a); the remainder is h(a) = 0.
      std::fill(quot.begin(), quot.end(), 0);
      Elem carry = 0;
      for (std::size_t k = q; k-- > 1;) {
        carry = f.add(coeff[k], f.mul(a, carry));
        quot[k - 1] = carry;
      }
      for (std::size_t x = 0; x < q; ++x) {
        Elem v = 0;
        for (std::size_t k = q; k-- > 0;) v = f.add(f.mul(v, static_cast<Elem>(x)), quot[k]);
        g.set(base + off + x * stride, v);
      }
    }
  }
  return g;
}

/// Returns the (m-1)-variable g with t = (1 - (x_axis - a)^(q-1)) * g.
/// Requires t to vanish everywhere off the hyperplane x_axis = a.
inline FuncTable peel_indicator(const FuncTable& t, int axis, Elem a) {
  detail::check_axis(t, axis);
  const Field& f = t.field();
  if (!f.contains(a)) throw PreconditionError("offset is not a field element");
  const int m = t.vars();
  FuncTable g(f, m - 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Point x = point_at(i, f.order(), m);
    if (x[static_cast<std::size_t>(axis)] != a) {
      if (t[i] != 0)
        throw PreconditionError("function is nonzero off x" + std::to_string(axis + 1) + " = " + std::to_string(a) +
                                    ": value " + std::to_string(t[i]) + " at " + format_point(x),
                                x);
      continue;
    }
    x.erase(x.begin() + axis);
    g.set(point_index(x, f.order()), t[i]);
  }
  return g;
}

/// Lifts an (m-1)-variable g to m variables by inserting an unused
/// coordinate at position axis.
inline FuncTable lift(const FuncTable& g, int axis) {
  const Field& f = g.field();
  const int m = g.vars() + 1;
  FuncTable t(f, m);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Point x = point_at(i, f.order(), m);
    x.erase(x.begin() + axis);
    t.set(i, g.at(x));
  }
  return t;
}

}  // namespace grm
