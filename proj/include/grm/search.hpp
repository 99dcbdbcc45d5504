#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "grm/code.hpp"
#include "grm/detail/parallel.hpp"
#include "grm/error.hpp"
#include "grm/geometry.hpp"
#include "grm/poly.hpp"

namespace grm {

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 24;

/// Reduced monomials of total degree <= r, in lexicographic order of their
/// exponent vectors. The list length is the dimension of R_q(r, m).
inline std::vector<Monomial> monomial_basis(int q, int m, int r) {
  if (r < 0 || r > m * (q - 1))
    throw PreconditionError("order r = " + std::to_string(r) + " outside [0, m(q-1)]");
  std::vector<Monomial> out;
  Monomial e(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int axis, int left) -> void {
    if (axis == m) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= std::min(q - 1, left); ++k) {
      e[static_cast<std::size_t>(axis)] = static_cast<std::uint8_t>(k);
      self(self, axis + 1, left - k);
    }
    e[static_cast<std::size_t>(axis)] = 0;
  };
  rec(rec, 0, r);
  return out;
}

inline std::size_t code_dimension(const CodeParams& p) { return monomial_basis(p.q, p.m, p.r).size(); }

namespace detail {

// q^k, or nullopt past 2^63.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 1) / q) return std::nullopt;
    r *= q;
  }
  return r;
}

inline std::uint64_t require_budget(const CodeParams& p, std::size_t dim, std::uint64_t budget) {
  auto total = checked_pow(static_cast<std::uint64_t>(p.q), dim);
  if (!total || *total > budget)
    throw BudgetError(p.name() + " has dimension " + std::to_string(dim) + "; enumerating it needs a budget of " +
                      (total ? std::to_string(*total) : std::to_string(p.q) + "^" + std::to_string(dim)) +
                      " codewords, budget is " + std::to_string(budget));
  return *total;
}

}  // namespace detail

/// Sweeps every codeword of R_q(r, m). Codeword `index` has coefficient
/// c_j = digit j of index in base q (c_0 least significant) on monomial j of
/// monomial_basis. The sweep is split into contiguous index ranges by the
/// most significant digits; range k gets its own State and calls
/// visit(state, index, values, weight). Returns the states in range order.
template <class State, class Visit>
std::vector<State> visit_codewords(const CodeParams& p, std::uint64_t budget, int jobs, Visit&& visit) {
  const Field& f = p.field();
  const int q = p.q;
  const auto basis = monomial_basis(q, p.m, p.r);
  const std::size_t k = basis.size();
  detail::require_budget(p, k, budget);
  const std::size_t n = point_count(q, p.m);

  // rows[j][delta] = delta * (monomial j evaluated at every point)
  std::vector<std::vector<std::vector<Elem>>> rows(k, std::vector<std::vector<Elem>>(static_cast<std::size_t>(q)));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Elem> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point x = point_at(i, q, p.m);
      Elem v = 1;
      for (int a = 0; a < p.m; ++a) v = f.mul(v, f.pow(x[static_cast<std::size_t>(a)], basis[j][static_cast<std::size_t>(a)]));
      ev[i] = v;
    }
    for (int d = 0; d < q; ++d) {
      auto& row = rows[j][static_cast<std::size_t>(d)];
      row.resize(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = f.mul(static_cast<Elem>(d), ev[i]);
    }
  }

  std::size_t lead = 0;
  if (jobs > 1) {
    while (lead < k && detail::ipow(static_cast<std::uint64_t>(q), static_cast<int>(lead)) < 4 * static_cast<std::uint64_t>(jobs)) ++lead;
  }
  const std::size_t inner = k - lead;
  const std::uint64_t parts = detail::ipow(static_cast<std::uint64_t>(q), static_cast<int>(lead));
  const std::uint64_t span = detail::ipow(static_cast<std::uint64_t>(q), static_cast<int>(inner));

  std::vector<State> states(parts);
  detail::parallel_for(parts, jobs, [&](std::size_t part) {
    State& st = states[part];
    std::vector<Elem> digits(k, 0);
    std::vector<Elem> values(n, 0);
    auto set_digit = [&](std::size_t j, Elem nv) {
      const Elem delta = f.sub(nv, digits[j]);
      const auto& row = rows[j][delta];
      for (std::size_t i = 0; i < n; ++i) values[i] = f.add(values[i], row[i]);
      digits[j] = nv;
    };
    std::uint64_t rest = part;
    for (std::size_t j = inner; j < k; ++j) {
      set_digit(j, static_cast<Elem>(rest % static_cast<std::uint64_t>(q)));
      rest /= static_cast<std::uint64_t>(q);
    }
    std::size_t w = 0;
    for (auto v : values) w += v != 0;
    const std::uint64_t base = static_cast<std::uint64_t>(part) * span;
    for (std::uint64_t step = 0; step < span; ++step) {
      visit(st, base + step, std::span<const Elem>(values), w);
      if (step + 1 == span) break;
      for (std::size_t j = 0; j < inner; ++j) {
        const Elem nv = digits[j] + 1 == q ? Elem{0} : static_cast<Elem>(digits[j] + 1);
        const Elem delta = f.sub(nv, digits[j]);
        const auto& row = rows[j][delta];
        for (std::size_t i = 0; i < n; ++i) {
          const Elem before = values[i];
          const Elem after = f.add(before, row[i]);
          w += (after != 0) - (before != 0);
          values[i] = after;
        }
        digits[j] = nv;
        if (nv != 0) break;
      }
    }
  });
  return states;
}

/// The coefficient vector of codeword `index` (see visit_codewords).
inline std::vector<Elem> codeword_coefficients(const CodeParams& p, std::uint64_t index) {
  std::vector<Elem> c(code_dimension(p));
  for (auto& v : c) {
    v = static_cast<Elem>(index % static_cast<std::uint64_t>(p.q));
    index /= static_cast<std::uint64_t>(p.q);
  }
  return c;
}

struct EnumOptions {
  /// Largest weight whose codewords are kept (histogram buckets above it are
  /// still counted). Defaults to the second weight, or W1 when there is none.
  std::optional<std::size_t> cutoff;
  std::uint64_t budget = kDefaultEnumBudget;
  int jobs = 1;
  /// Cap on kept codewords per weight, lowest indices first.
  std::size_t max_kept = std::numeric_limits<std::size_t>::max();
};

struct KeptWord {
  std::uint64_t index = 0;
  std::size_t weight = 0;
  std::vector<Elem> values;
};

struct EnumReport {
  CodeParams params;
  std::size_t dimension = 0;
  std::uint64_t total = 0;
  std::size_t cutoff = 0;
  /// Codeword count per nonzero weight, over the whole code.
  std::map<std::size_t, std::uint64_t> histogram;
  std::optional<std::size_t> observed_w1, observed_w2;
  /// Codewords of weight <= cutoff, ascending by index.
  std::vector<KeptWord> words;
  double seconds = 0.0;

  std::map<std::size_t, std::uint64_t> histogram_to_cutoff() const {
    std::map<std::size_t, std::uint64_t> out;
    for (auto [w, c] : histogram)
      if (w <= cutoff) out[w] = c;
    return out;
  }

  FuncTable table(const KeptWord& w) const { return FuncTable(params.field(), params.m, w.values); }
};

/// Exhaustive sweep of R_q(r, m) recording the weight distribution and every
/// codeword up to the cutoff weight.
inline EnumReport enumerate_low_weight(const CodeParams& p, const EnumOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  EnumReport rep;
  rep.params = p;
  rep.dimension = code_dimension(p);
  rep.total = detail::require_budget(p, rep.dimension, opt.budget);
  if (opt.cutoff) {
    rep.cutoff = *opt.cutoff;
  } else {
    const auto w2 = p.q >= 3 ? second_weight(p).w2 : std::nullopt;
    rep.cutoff = w2 ? static_cast<std::size_t>(*w2) : static_cast<std::size_t>(min_weight(p));
  }

  struct Partial {
    std::map<std::size_t, std::uint64_t> hist;
    std::vector<KeptWord> kept;
    std::map<std::size_t, std::size_t> kept_per_weight;
  };
  const std::size_t cutoff = rep.cutoff;
  const std::size_t cap = opt.max_kept;
  auto parts = visit_codewords<Partial>(p, opt.budget, opt.jobs,
                                        [cutoff, cap](Partial& st, std::uint64_t idx, std::span<const Elem> values, std::size_t w) {
                                          if (w == 0) return;
                                          ++st.hist[w];
                                          if (w > cutoff) return;
                                          auto& n = st.kept_per_weight[w];
                                          if (n >= cap) return;
                                          ++n;
                                          st.kept.push_back({idx, w, std::vector<Elem>(values.begin(), values.end())});
                                        });
  std::map<std::size_t, std::size_t> kept_per_weight;
  for (auto& part : parts) {
    for (auto [w, c] : part.hist) rep.histogram[w] += c;
    for (auto& kw : part.kept) {
      auto& n = kept_per_weight[kw.weight];
      if (n >= cap) continue;
      ++n;
      rep.words.push_back(std::move(kw));
    }
  }
  auto it = rep.histogram.begin();
  if (it != rep.histogram.end()) {
    rep.observed_w1 = it->first;
    if (++it != rep.histogram.end()) rep.observed_w2 = it->first;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// `count` affine maps from `seed`: the identity first, then random ones.
inline std::vector<AffineMap> orbit_maps(const Field& f, int m, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw PreconditionError("orbit sample count must be at least 1");
  std::vector<AffineMap> out;
  out.reserve(count);
  out.push_back(AffineMap::identity(f, m));
  std::mt19937_64 rng(seed);
  while (out.size() < count) out.push_back(AffineMap::random(f, m, rng));
  return out;
}

/// Images of t under orbit_maps(count, seed); the first is t itself.
inline std::vector<FuncTable> orbit_samples(const FuncTable& t, std::size_t count, std::uint64_t seed) {
  std::vector<FuncTable> out;
  out.reserve(count);
  for (const auto& g : orbit_maps(t.field(), t.vars(), count, seed)) out.push_back(apply_map(t, g));
  return out;
}

}  // namespace grm
