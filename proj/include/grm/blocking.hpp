#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grm/code.hpp"
#include "grm/detail/parallel.hpp"
#include "grm/error.hpp"
#include "grm/geometry.hpp"
#include "grm/linalg.hpp"
#include "grm/poly.hpp"
#include "grm/search.hpp"

namespace grm {

/// A line {x in F_q^2 : normal . x = offset} and its points as indices.
struct PlaneLine {
  Point normal;
  Elem offset = 0;
  std::vector<std::size_t> points;
};

/// The q(q+1) lines of AG(2, q), grouped by parallel class in canonical order.
inline std::vector<PlaneLine> plane_lines(int q) {
  const Field& f = Field::get(q);
  std::vector<PlaneLine> out;
  const std::size_t n = point_count(q, 2);
  for (const auto& c : canonical_normals(q, 2)) {
    std::vector<PlaneLine> cls(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) cls[static_cast<std::size_t>(k)] = {c, static_cast<Elem>(k), {}};
    for (std::size_t i = 0; i < n; ++i) cls[linalg::dot(f, c, point_at(i, q, 2))].points.push_back(i);
    for (auto& l : cls) out.push_back(std::move(l));
  }
  return out;
}

namespace detail {

inline std::vector<char> plane_membership(std::span<const Point> s, int q) {
  const Field& f = Field::get(q);
  std::vector<char> in(point_count(q, 2), 0);
  for (const auto& x : s) {
    if (x.size() != 2) throw PreconditionError("point " + format_point(x) + " is not in the plane");
    for (auto v : x)
      if (!f.contains(v)) throw PreconditionError("point " + format_point(x) + " has a coordinate outside F_" + std::to_string(q));
    auto& slot = in[point_index(x, q)];
    if (slot) throw PreconditionError("point " + format_point(x) + " listed twice");
    slot = 1;
  }
  return in;
}

inline bool blocking_membership(const std::vector<char>& in, int n, int q) {
  for (const auto& l : plane_lines(q)) {
    int hit = 0;
    for (auto i : l.points) hit += in[i];
    if (hit < n || q - hit < n) return false;
  }
  return true;
}

}  // namespace detail

/// Whether every line of AG(2, q) meets both S and its complement in at least
/// n points.
inline bool is_blocking(std::span<const Point> s, int n, int q) {
  return detail::blocking_membership(detail::plane_membership(s, q), n, q);
}

inline bool is_blocking_indices(std::span<const std::size_t> s, int n, int q) {
  std::vector<char> in(point_count(q, 2), 0);
  for (auto i : s) {
    if (i >= in.size()) throw PreconditionError("point index " + std::to_string(i) + " outside the plane");
    if (in[i]) throw PreconditionError("point index " + std::to_string(i) + " listed twice");
    in[i] = 1;
  }
  return detail::blocking_membership(in, n, q);
}

/// The smallest size nq + q - n a blocking set of order n can have.
inline int blocking_bound(int q, int n) { return n * q + q - n; }

struct BlockingSearchReport {
  int q = 0;
  int n = 0;
  int bound = 0;
  std::uint64_t subsets_below_bound = 0;
  std::uint64_t blocking_below_bound = 0;
  std::uint64_t subsets_at_or_above = 0;
  std::uint64_t blocking_total = 0;
  std::optional<int> minimum;
  std::uint64_t count_at_minimum = 0;
  std::vector<Point> witness;

  bool bound_holds() const { return blocking_below_bound == 0 && (!minimum || *minimum >= bound); }
};

/// Exhaustive search over all 2^(q^2) subsets of AG(2, q). Subsets below the
/// size bound form one phase, the rest another; both are checked and counted.
/// The witness is the lowest-index subset of minimum size.
inline BlockingSearchReport min_blocking_size(int q, int n, int jobs = 1) {
  if (q < 2 || q > 4 || !Field::supported(q))
    throw PreconditionError("exhaustive blocking set search supports q in {2, 3, 4}, got " + std::to_string(q));
  if (n < 1 || n > q - 1) throw PreconditionError("order n must satisfy 1 <= n <= q-1");
  const int npts = q * q;
  std::vector<std::uint32_t> masks;
  for (const auto& l : plane_lines(q)) {
    std::uint32_t m = 0;
    for (auto i : l.points) m |= std::uint32_t{1} << i;
    masks.push_back(m);
  }
  const int bound = blocking_bound(q, n);

  struct Partial {
    std::uint64_t below = 0, below_hit = 0, above = 0, hits = 0, at_min = 0;
    int best = -1;
    std::uint32_t best_mask = 0;
  };
  const int lead = std::min(npts, 4);
  const std::size_t parts = std::size_t{1} << lead;
  const int inner = npts - lead;
  std::vector<Partial> partial(parts);
  detail::parallel_for(parts, jobs, [&](std::size_t part) {
    Partial& st = partial[part];
    const std::uint32_t high = static_cast<std::uint32_t>(part) << inner;
    for (std::uint32_t low = 0; low < (std::uint32_t{1} << inner); ++low) {
      const std::uint32_t s = high | low;
      const int size = std::popcount(s);
      bool ok = true;
      for (auto m : masks) {
        const int hit = std::popcount(s & m);
        if (hit < n || q - hit < n) {
          ok = false;
          break;
        }
      }
      if (size < bound) {
        ++st.below;
        st.below_hit += ok;
      } else {
        ++st.above;
      }
      if (!ok) continue;
      ++st.hits;
      if (st.best < 0 || size < st.best) {
        st.best = size;
        st.best_mask = s;
        st.at_min = 1;
      } else if (size == st.best) {
        ++st.at_min;
      }
    }
  });

  BlockingSearchReport rep;
  rep.q = q;
  rep.n = n;
  rep.bound = bound;
  int best = -1;
  std::uint32_t best_mask = 0;
  for (const auto& st : partial) {
    rep.subsets_below_bound += st.below;
    rep.blocking_below_bound += st.below_hit;
    rep.subsets_at_or_above += st.above;
    rep.blocking_total += st.hits;
    if (st.best < 0) continue;
    if (best < 0 || st.best < best) {
      best = st.best;
      best_mask = st.best_mask;
      rep.count_at_minimum = st.at_min;
    } else if (st.best == best) {
      rep.count_at_minimum += st.at_min;
    }
  }
  if (best >= 0) {
    rep.minimum = best;
    for (int i = 0; i < npts; ++i)
      if (best_mask >> i & 1u) rep.witness.push_back(point_at(static_cast<std::size_t>(i), q, 2));
  }
  return rep;
}

/// An affine form normal . x - offset with a canonical normal.
struct LinearFactor {
  Point normal;
  Elem offset = 0;
};

/// The first line (canonical scan order over normals, then offsets) on which
/// t vanishes identically; t is then divisible by its affine form.
inline std::optional<LinearFactor> has_linear_factor(const FuncTable& t) {
  if (t.vars() != 2) throw PreconditionError("linear factor detection works on functions of 2 variables");
  if (weight(t) == 0) throw PreconditionError("the zero function has every linear factor");
  for (const auto& l : plane_lines(t.order())) {
    bool zero = true;
    for (auto i : l.points)
      if (t[i] != 0) {
        zero = false;
        break;
      }
    if (zero) return LinearFactor{l.normal, l.offset};
  }
  return std::nullopt;
}

/// The affine form of a factor as a table.
inline FuncTable factor_table(const Field& f, const LinearFactor& l) {
  return affine_form(f, l.normal, f.neg(l.offset));
}

/// g with t = (normal . x - offset) * g; works for any number of variables.
/// Throws if t does not vanish on the hyperplane.
inline FuncTable linear_factor_cofactor(const FuncTable& t, const LinearFactor& l) {
  const Field& f = t.field();
  const std::size_t m = static_cast<std::size_t>(t.vars());
  if (l.normal.size() != m) throw PreconditionError("factor normal has the wrong length");
  std::size_t lead = 0;
  while (lead < m && l.normal[lead] == 0) ++lead;
  if (lead == m) throw PreconditionError("factor normal is zero");
  // Rows of N: the normal, then unit vectors away from the lead position.
  linalg::Mat nmat;
  nmat.push_back(l.normal);
  for (std::size_t j = 0; j < m; ++j) {
    if (j == lead) continue;
    linalg::Vec e(m, 0);
    e[j] = 1;
    nmat.push_back(std::move(e));
  }
  Point shift(m, 0);
  shift[lead] = f.mul(l.offset, f.inv(l.normal[lead]));
  // phi(y) = N^{-1} y + shift sends y_1 = 0 onto the factor's hyperplane.
  const AffineMap phi(f, *linalg::inverse(f, nmat), shift);
  const FuncTable h = divide_linear(apply_map(t, phi), 0, 0);
  return apply_map(h, phi.inverse());
}

struct FactorFreeReport {
  int q = 0;
  int b = 0;
  int order = 0;                  // q - b
  std::size_t weight_limit = 0;   // (q-b+1)(q-1)
  std::uint64_t codewords = 0;
  std::uint64_t in_range = 0;     // nonzero, weight <= limit
  std::uint64_t with_factor = 0;
  std::uint64_t factor_free = 0;
  std::uint64_t blocking_ok = 0;
  std::uint64_t violations = 0;
  std::vector<std::uint64_t> violation_indices;

  bool vacuous() const { return factor_free == 0; }
  /// Every in-range codeword has a linear factor.
  bool bridge_holds() const { return factor_free == 0; }
};

/// Sweeps R_q(b, 2): each nonzero codeword of weight at most (q-b+1)(q-1)
/// without a linear factor must have a support that is a blocking set of
/// order q-b.
inline FactorFreeReport check_factor_free_blocking(int q, int b, std::uint64_t budget = kDefaultEnumBudget, int jobs = 1) {
  if (b < 1 || b > q - 1) throw PreconditionError("b must satisfy 1 <= b <= q-1");
  const auto p = CodeParams::make(q, 2, b);
  FactorFreeReport rep;
  rep.q = q;
  rep.b = b;
  rep.order = q - b;
  rep.weight_limit = static_cast<std::size_t>((q - b + 1) * (q - 1));
  const auto lines = plane_lines(q);

  struct Partial {
    std::uint64_t seen = 0, in_range = 0, with_factor = 0, free = 0, ok = 0, bad = 0;
    std::vector<std::uint64_t> bad_idx;
  };
  const std::size_t limit = rep.weight_limit;
  const int order = rep.order;
  auto parts = visit_codewords<Partial>(p, budget, jobs, [&](Partial& st, std::uint64_t idx, std::span<const Elem> v, std::size_t w) {
    ++st.seen;
    if (w == 0 || w > limit) return;
    ++st.in_range;
    bool factor = false;
    for (const auto& l : lines) {
      bool zero = true;
      for (auto i : l.points)
        if (v[i] != 0) {
          zero = false;
          break;
        }
      if (zero) {
        factor = true;
        break;
      }
    }
    if (factor) {
      ++st.with_factor;
      return;
    }
    ++st.free;
    std::vector<char> in(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) in[i] = v[i] != 0;
    if (detail::blocking_membership(in, order, q)) {
      ++st.ok;
    } else {
      ++st.bad;
      if (st.bad_idx.size() < 16) st.bad_idx.push_back(idx);
    }
  });
  for (const auto& st : parts) {
    rep.codewords += st.seen;
    rep.in_range += st.in_range;
    rep.with_factor += st.with_factor;
    rep.factor_free += st.free;
    rep.blocking_ok += st.ok;
    rep.violations += st.bad;
    for (auto i : st.bad_idx)
      if (rep.violation_indices.size() < 16) rep.violation_indices.push_back(i);
  }
  return rep;
}

}  // namespace grm
