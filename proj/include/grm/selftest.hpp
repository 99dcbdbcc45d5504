#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "grm/blocking.hpp"
#include "grm/classify.hpp"
#include "grm/code.hpp"
#include "grm/geometry.hpp"
#include "grm/poly.hpp"
#include "grm/search.hpp"

// The acceptance suite: one check per criterion, each returning pass/fail and
// a one-line summary of what it measured.
namespace grm::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  int jobs = 1;
  /// Random affine images per codeword for the orbit criterion.
  std::size_t orbit_samples = 100;
  std::uint64_t seed = 20240611;
};

namespace detail {

template <class Fn>
CriterionResult timed(int id, std::string name, Fn&& fn) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = fn(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline Point random_point(int q, int m, std::mt19937_64& rng) {
  Point x(static_cast<std::size_t>(m));
  for (auto& v : x) v = static_cast<Elem>(rng() % static_cast<std::uint64_t>(q));
  return x;
}

inline FuncTable random_table(const Field& f, int m, std::mt19937_64& rng) {
  FuncTable t(f, m);
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, static_cast<Elem>(rng() % static_cast<std::uint64_t>(f.order())));
  return t;
}

// Degree of sum_i c_i 1_{w_i} expanded symbolically as
// sum_i c_i prod_j (1 - (x_j - w_ij)^(q-1)).
inline int point_mass_degree_by_expansion(const Field& f, std::span<const Point> pts, std::span<const Elem> cs) {
  const int m = static_cast<int>(pts.front().size());
  const int q = f.order();
  ReducedPoly sum(f, m);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ReducedPoly prod = ReducedPoly::constant(f, m, cs[i]);
    for (int j = 0; j < m; ++j) {
      const ReducedPoly lin = ReducedPoly::variable(f, m, j) - ReducedPoly::constant(f, m, pts[i][static_cast<std::size_t>(j)]);
      ReducedPoly pw = ReducedPoly::constant(f, m, 1);
      for (int k = 0; k < q - 1; ++k) pw = pw * lin;
      prod = prod * (ReducedPoly::constant(f, m, 1) - pw);
    }
    sum = sum + prod;
  }
  return sum.degree();
}

}  // namespace detail

inline CriterionResult formula_agreement(const Options& opt) {
  return detail::timed(1, "formula agreement (exhaustive W1/W2)", [&](std::string& out) {
    struct Case {
      int q, m, r;
      std::size_t w1, w2;
    };
    const Case cases[] = {{3, 2, 1, 6, 9}, {3, 2, 2, 3, 4}, {3, 2, 3, 2, 3}, {4, 2, 2, 8, 9}, {4, 2, 3, 4, 6}, {5, 2, 2, 15, 16}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
      const auto p = CodeParams::make(c.q, c.m, c.r);
      EnumOptions eo;
      eo.jobs = opt.jobs;
      eo.max_kept = 0;
      const auto rep = enumerate_low_weight(p, eo);
      const auto w2 = second_weight(p).w2;
      const bool good = rep.observed_w1 == c.w1 && rep.observed_w2 == c.w2 && min_weight(p) == c.w1 && w2 && *w2 == c.w2;
      ok = ok && good;
      os << p.name() << " " << rep.observed_w1.value_or(0) << "/" << rep.observed_w2.value_or(0) << (good ? "" : " MISMATCH") << "; ";
    }
    out = os.str();
    return ok;
  });
}

inline CriterionResult classification_completeness(const Options& opt) {
  return detail::timed(2, "classification completeness (exhaustive W2)", [&](std::string& out) {
    struct Case {
      int q, m, r;
      std::set<Tag> allowed;
    };
    const std::vector<Case> cases = {{3, 2, 2, {Tag::S0Parallel, Tag::S0Pencil}},
                                     {4, 2, 2, {Tag::TypeA, Tag::TypeB}},
                                     {5, 2, 2, {Tag::TypeA, Tag::TypeB}}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
      const auto p = CodeParams::make(c.q, c.m, c.r);
      const auto w2 = static_cast<std::size_t>(*second_weight(p).w2);
      EnumOptions eo;
      eo.jobs = opt.jobs;
      eo.cutoff = w2;
      const auto rep = enumerate_low_weight(p, eo);
      std::map<Tag, std::size_t> counts;
      std::size_t bad_witness = 0;
      for (const auto& w : rep.words) {
        if (w.weight != w2) continue;
        const auto t = rep.table(w);
        const auto cls = classify_second(t, p);
        ++counts[cls.tag];
        if (cls.tag != Tag::Unknown && reconstruct_support(cls, p.q, p.m) != support(t)) ++bad_witness;
      }
      std::size_t total = 0, allowed = 0;
      os << p.name() << ":";
      for (auto [tag, n] : counts) {
        total += n;
        if (c.allowed.count(tag)) allowed += n;
        os << " " << tag_name(tag) << "=" << n;
      }
      if (bad_witness) os << " bad-witness=" << bad_witness;
      os << "; ";
      ok = ok && total > 0 && allowed == total && bad_witness == 0;
    }
    out = os.str();
    return ok;
  });
}

inline CriterionResult constructor_grid(const Options&) {
  return detail::timed(3, "constructor grid (weights and degrees)", [&](std::string& out) {
    std::size_t built = 0, bad = 0;
    std::ostringstream fails;
    for (int q : {3, 4, 5, 7})
      for (int m : {2, 3, 4})
        for (int r = 0; r <= m * (q - 1); ++r) {
          const auto p = CodeParams::make(q, m, r);
          for (auto fam : kAllFamilies) {
            if (!family_applies(fam, p)) continue;
            const auto t = construct(fam, p);
            ++built;
            const auto w = weight(t);
            const auto expect = fam == Family::Min ? min_weight(p) : *second_weight(p).w2;
            if (w != family_weight(fam, p) || w != expect || !is_codeword(t, r)) {
              ++bad;
              if (bad <= 5) fails << " " << family_name(fam) << "@" << p.name() << " weight " << w;
            }
          }
        }
    const auto p453 = CodeParams::make(4, 3, 5);
    const auto p333 = CodeParams::make(3, 3, 3);
    const auto wa = weight(construct_second_A(p453));
    const auto wb = weight(construct_second_B(p453));
    const auto wc = weight(construct_second_s1_q3(p333));
    std::ostringstream os;
    os << built << " codewords, " << bad << " mismatches" << fails.str() << "; A/B at R_4(5,3): " << wa << "/" << wb
       << "; s1-q3 at R_3(3,3): " << wc;
    out = os.str();
    return bad == 0 && built > 0 && wa == 9 && wb == 9 && wc == 8;
  });
}

inline CriterionResult orbit_invariance(const Options& opt) {
  return detail::timed(4, "affine orbit invariance", [&](std::string& out) {
    std::size_t words = 0, images = 0, bad = 0;
    std::ostringstream fails;
    std::uint64_t seed = opt.seed;
    const std::pair<int, int> grid[] = {{3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {4, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3}};
    for (auto [q, m] : grid)
      for (int r = 1; r < m * (q - 1); ++r) {
        const auto p = CodeParams::make(q, m, r);
        for (auto fam : kAllFamilies) {
          if (!family_applies(fam, p)) continue;
          const auto t = construct(fam, p);
          const auto base = classify(t, p);
          ++words;
          const auto want = expected_tag(fam, p);
          const bool expected_ok = std::find(base.matched.begin(), base.matched.end(), want) != base.matched.end();
          if (!expected_ok) {
            ++bad;
            if (bad <= 5) fails << " " << family_name(fam) << "@" << p.name() << " got " << tag_name(base.tag);
            continue;
          }
          for (const auto& img : orbit_samples(t, opt.orbit_samples, seed++)) {
            ++images;
            if (weight(img) != weight(t) || classify(img, p).tag != base.tag) {
              ++bad;
              if (bad <= 5) fails << " image of " << family_name(fam) << "@" << p.name();
            }
          }
        }
      }
    std::ostringstream os;
    os << words << " codewords x " << opt.orbit_samples << " images (" << images << "), " << bad << " failures" << fails.str();
    out = os.str();
    return bad == 0 && words > 0;
  });
}

inline CriterionResult division_round_trip(const Options& opt) {
  return detail::timed(5, "linear division round trip", [&](std::string& out) {
    std::mt19937_64 rng(opt.seed ^ 0x5deece66dULL);
    std::size_t divided = 0, peeled = 0, bad = 0;
    for (auto [q, m] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
      const Field& f = Field::get(q);
      for (int i = 0; i < 500; ++i) {
        const int axis = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        const auto a = static_cast<Elem>(rng() % static_cast<std::uint64_t>(q));
        const FuncTable lin = grm::detail::shifted_coordinate(f, m, axis, a);
        const FuncTable t = lin * detail::random_table(f, m, rng);
        const FuncTable g = divide_linear(t, axis, a);
        ++divided;
        if (lin * g != t || degree_in(g, axis) > std::max(-1, degree_in(t, axis) - 1)) ++bad;
      }
      for (int i = 0; i < 200; ++i) {
        const int axis = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        const auto a = static_cast<Elem>(rng() % static_cast<std::uint64_t>(q));
        FuncTable g = detail::random_table(f, m - 1, rng);
        if (weight(g) == 0) g.set(0, 1);
        const FuncTable t = hyperplane_indicator(f, m, axis, a) * lift(g, axis);
        const FuncTable back = peel_indicator(t, axis, a);
        ++peeled;
        if (back != g || degree(t) != (q - 1) + degree(g)) ++bad;
      }
    }
    std::ostringstream os;
    os << divided << " divisions, " << peeled << " peels, " << bad << " failures";
    out = os.str();
    return bad == 0;
  });
}

inline CriterionResult blocking_sets(const Options& opt) {
  return detail::timed(6, "blocking set bound and factor-free supports", [&](std::string& out) {
    bool ok = true;
    std::ostringstream os;
    for (auto [q, n, bound] : {std::tuple{3, 1, 5}, std::tuple{3, 2, 7}, std::tuple{4, 1, 7}}) {
      const auto rep = min_blocking_size(q, n, opt.jobs);
      const bool good = rep.bound == bound && rep.bound_holds() && rep.blocking_below_bound == 0;
      ok = ok && good;
      os << "(q=" << q << ",n=" << n << ") bound " << rep.bound << " min ";
      if (rep.minimum) os << *rep.minimum;
      else os << "none";
      os << "; ";
    }
    for (auto [q, b] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}}) {
      const auto rep = check_factor_free_blocking(q, b, kDefaultEnumBudget, opt.jobs);
      ok = ok && rep.violations == 0;
      os << "prop(q=" << q << ",b=" << b << ") violations " << rep.violations << (rep.vacuous() ? " (vacuous)" : "") << "; ";
    }
    out = os.str();
    return ok;
  });
}

inline CriterionResult point_mass_certificates(const Options& opt) {
  return detail::timed(7, "point-mass degree certificates", [&](std::string& out) {
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t cases = 0, bad = 0;
    for (int q : {3, 4, 5})
      for (int m : {2, 3}) {
        const Field& f = Field::get(q);
        const int bound3 = (m - 1) * (q - 1) + q - 2;
        const int bound4 = (m - 1) * (q - 1) + q - 3;
        for (int trial = 0; trial < 25; ++trial) {
          std::vector<Point> pts;
          while (pts.size() < 3) {
            auto x = detail::random_point(q, m, rng);
            if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(std::move(x));
          }
          Elem a = 0, b = 0;
          do {
            a = static_cast<Elem>(1 + rng() % static_cast<std::uint64_t>(q - 1));
            b = static_cast<Elem>(1 + rng() % static_cast<std::uint64_t>(q - 1));
          } while (f.add(a, b) == 0);
          const std::vector<Elem> cs{a, b, f.neg(f.add(a, b))};
          const auto res = construct_point_mass(f, pts, cs);
          const int oracle = detail::point_mass_degree_by_expansion(f, pts, cs);
          ++cases;
          if (!res.sum_zero || res.certified_bound > bound3 || !res.certified || oracle != res.degree || oracle > bound3) ++bad;

          Point w4(static_cast<std::size_t>(m));
          for (int j = 0; j < m; ++j) w4[j] = f.sub(f.add(pts[0][j], pts[1][j]), pts[2][j]);
          if (std::find(pts.begin(), pts.end(), w4) != pts.end()) continue;
          std::vector<Point> quad = pts;
          quad.push_back(w4);
          const std::vector<Elem> cq{1, 1, f.neg(1), f.neg(1)};
          const auto rq = construct_point_mass(f, quad, cq);
          const int oq = detail::point_mass_degree_by_expansion(f, quad, cq);
          ++cases;
          if (!rq.moment_zero || rq.certified_bound > bound4 || !rq.certified || oq != rq.degree || oq > bound4) ++bad;
        }
      }
    std::ostringstream os;
    os << cases << " configurations, " << bad << " failures";
    out = os.str();
    return bad == 0 && cases > 0;
  });
}

inline CriterionResult regime_overlap(const Options&) {
  return detail::timed(8, "second weight regime overlap", [&](std::string& out) {
    std::size_t points = 0, overlaps = 0, bad = 0;
    std::ostringstream fails;
    for (int q : {3, 4, 5, 7, 8, 9})
      for (int m = 1; m <= 4; ++m)
        for (int r = 1; r <= m * (q - 1); ++r) {
          const auto p = CodeParams::make(q, m, r);
          const auto cands = second_weight_candidates(p);
          const auto chosen = second_weight(p);
          ++points;
          if (cands.size() > 1) ++overlaps;
          bool good = !cands.empty() && chosen.w2.has_value();
          for (const auto& c : cands) good = good && chosen.w2 && c.w2 == *chosen.w2;
          if (!good) {
            ++bad;
            if (bad <= 5) fails << " " << p.name();
          }
        }
    std::ostringstream os;
    os << points << " parameter points, " << overlaps << " with overlapping branches, " << bad << " disagreements" << fails.str();
    out = os.str();
    return bad == 0;
  });
}

inline const std::vector<std::function<CriterionResult(const Options&)>>& criteria() {
  static const std::vector<std::function<CriterionResult(const Options&)>> all = {
      formula_agreement, classification_completeness, constructor_grid, orbit_invariance,
      division_round_trip, blocking_sets, point_mass_certificates, regime_overlap};
  return all;
}

/// Runs every criterion, or only `only` (1-based) when given.
inline std::vector<CriterionResult> run(const Options& opt, int only = 0) {
  std::vector<CriterionResult> out;
  const auto& all = criteria();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (only == 0 || only == static_cast<int>(i + 1)) out.push_back(all[i](opt));
  return out;
}

}  // namespace grm::selftest
