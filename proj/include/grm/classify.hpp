#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grm/code.hpp"
#include "grm/error.hpp"
#include "grm/geometry.hpp"
#include "grm/linalg.hpp"
#include "grm/poly.hpp"

namespace grm {

/// Geometric configuration realized by the support of a low-weight codeword.
enum class Tag {
  MinWeightParallelStack,  // q-s parallel codim-(t+1) flats inside a codim-t flat
  TypeA,                   // q-s+1 parallel codim-(t+1) flats minus one transversal
  TypeB,                   // q-s+1 codim-(t+1) flats through a codim-(t+2) flat, minus it
  S0Parallel,              // 2 parallel codim-t flats minus a transversal
  S0Pencil,                // 2 non-parallel codim-t flats minus their intersection
  AffineFlatSupport,       // an affine flat
  Q3Fig2,                  // 2 parallel hyperplanes of A minus 2 non-parallel hyperplanes
  LineSupported,           // contained in a line
  PlaneContained,          // contained in an affine plane
  Unknown,
};

inline std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::MinWeightParallelStack: return "MinWeightParallelStack";
    case Tag::TypeA: return "TypeA";
    case Tag::TypeB: return "TypeB";
    case Tag::S0Parallel: return "S0Parallel";
    case Tag::S0Pencil: return "S0Pencil";
    case Tag::AffineFlatSupport: return "AffineFlatSupport";
    case Tag::Q3Fig2: return "Q3Fig2";
    case Tag::LineSupported: return "LineSupported";
    case Tag::PlaneContained: return "PlaneContained";
    case Tag::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline std::optional<Tag> parse_tag(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Tag::Unknown); ++i)
    if (tag_name(static_cast<Tag>(i)) == name) return static_cast<Tag>(i);
  return std::nullopt;
}

/// Result of classifying a support, with a witness from which the support can
/// be rebuilt: the union of `members` minus the union of `removed`, or the
/// explicit `points` for the containment tags.
struct Classification {
  Tag tag = Tag::Unknown;
  /// Every configuration the support fits, in search order. At s = 2 the
  /// Type A and Type B configurations coincide, as do the two s = 0
  /// configurations at q = 3; the first one found becomes `tag`.
  std::vector<Tag> matched;
  /// Whether a classification result covers this parameter regime, so that
  /// Unknown signals a counterexample (or a bug) rather than an open case.
  bool regime_covered = false;
  std::string note;
  std::optional<AffineFlat> hull;
  std::vector<AffineFlat> members;
  std::vector<AffineFlat> removed;
  std::vector<Point> points;
};

/// Rebuilds the support described by the witness, as ascending point indices.
inline std::vector<std::size_t> reconstruct_support(const Classification& c, int q, int m,
                                                    std::size_t budget = kDefaultPointBudget) {
  std::vector<char> in(point_count(q, m), 0);
  if (c.tag == Tag::LineSupported || c.tag == Tag::PlaneContained) {
    for (const auto& x : c.points) in[point_index(x, q)] = 1;
  } else {
    for (const auto& f : c.members)
      for (auto idx : f.point_indices(budget)) in[idx] = 1;
    for (const auto& f : c.removed)
      for (auto idx : f.point_indices(budget)) in[idx] = 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

namespace detail {

// A support expressed in the local coordinates of its affine hull, with the
// value of every hyperplane direction precomputed at every local point.
class LocalSupport {
 public:
  struct Hyperplane {
    std::size_t cls;
    Elem offset;
  };

  LocalSupport(const FuncTable& t, std::size_t budget)
      : field_(&t.field()), q_(t.order()), hull_(make_hull(t)) {
    d_ = hull_.dim();
    n_ = point_count(q_, d_);
    if (n_ > budget) throw BudgetError("support hull has " + std::to_string(n_) + " points, above the budget");
    in_s_.assign(n_, 0);
    for (auto idx : support(t)) {
      auto u = hull_.coordinates(point_at(idx, q_, t.vars()));
      in_s_[point_index(*u, q_)] = 1;
      ++s_count_;
    }
    if (d_ >= 1) {
      normals_ = canonical_normals(q_, d_);
      vals_.resize(normals_.size());
      hits_.resize(normals_.size());
      for (std::size_t c = 0; c < normals_.size(); ++c) {
        auto& v = vals_[c];
        v.resize(n_);
        hits_[c].assign(static_cast<std::size_t>(q_), 0);
        for (std::size_t i = 0; i < n_; ++i) {
          v[i] = linalg::dot(*field_, normals_[c], point_at(i, q_, d_));
          if (in_s_[i]) ++hits_[c][v[i]];
        }
        for (int k = 0; k < q_; ++k)
          if (hits_[c][static_cast<std::size_t>(k)] == 0) avoided_.push_back({c, static_cast<Elem>(k)});
      }
    }
  }

  const AffineFlat& hull() const { return hull_; }
  int dim() const { return d_; }
  std::size_t size() const { return n_; }
  std::size_t support_size() const { return s_count_; }
  bool full() const { return s_count_ == n_; }

  // S is the union of `k` members of one parallel class.
  std::optional<std::vector<Hyperplane>> match_stack(int k) const {
    const std::size_t hyper = n_ / static_cast<std::size_t>(q_);
    for (std::size_t c = 0; c < normals_.size(); ++c) {
      std::vector<Hyperplane> used;
      bool ok = true;
      for (int off = 0; off < q_ && ok; ++off) {
        const std::size_t h = hits_[c][static_cast<std::size_t>(off)];
        if (h == hyper) used.push_back({c, static_cast<Elem>(off)});
        else if (h != 0) ok = false;
      }
      if (ok && static_cast<int>(used.size()) == k) return used;
    }
    return std::nullopt;
  }

  struct ParallelMatch {
    std::vector<Hyperplane> members;
    std::vector<Hyperplane> transversals;
  };

  // S = (union of k members of one parallel class) minus (union of j
  // transversal hyperplanes, pairwise non-parallel and not parallel to the
  // class). Every hyperplane disjoint from S lies in the complement Z, so it
  // suffices to cover Z ∩ (hit members) with avoided transversals.
  std::optional<ParallelMatch> match_parallel(int k, int j) const {
    for (std::size_t c = 0; c < normals_.size(); ++c) {
      std::vector<Hyperplane> members;
      for (int off = 0; off < q_; ++off)
        if (hits_[c][static_cast<std::size_t>(off)] > 0) members.push_back({c, static_cast<Elem>(off)});
      if (static_cast<int>(members.size()) != k) continue;

      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < n_; ++i)
        if (!in_s_[i] && hits_[c][vals_[c][i]] > 0) rest.push_back(i);
      if (rest.empty()) continue;

      for (const auto& t1 : avoided_) {
        if (t1.cls == c || !on(t1, rest.front())) continue;
        std::vector<std::size_t> left;
        for (auto i : rest)
          if (!on(t1, i)) left.push_back(i);
        if (j == 1) {
          if (left.empty()) return ParallelMatch{members, {t1}};
          continue;
        }
        if (j != 2 || left.empty()) continue;
        for (const auto& t2 : avoided_) {
          if (t2.cls == c || t2.cls == t1.cls || !on(t2, left.front())) continue;
          if (std::all_of(left.begin(), left.end(), [&](std::size_t i) { return on(t2, i); }))
            return ParallelMatch{members, {t1, t2}};
        }
      }
    }
    return std::nullopt;
  }

  struct PencilMatch {
    std::vector<Hyperplane> members;  // pencil members meeting S
    std::vector<std::size_t> base;    // local points of the common codim-2 flat
    Hyperplane first, second;         // two avoided members cutting out the base
  };

  // The complement Z is the union of `a` >= 2 hyperplanes through a common
  // codim-2 flat B, so S is the other q+1-a pencil members minus B.
  std::optional<PencilMatch> match_pencil(int a) const {
    if (a < 2) return std::nullopt;
    std::vector<std::size_t> zset;
    for (std::size_t i = 0; i < n_; ++i)
      if (!in_s_[i]) zset.push_back(i);
    if (zset.empty()) return std::nullopt;
    for (const auto& k1 : avoided_) {
      if (!on(k1, zset.front())) continue;
      std::size_t z1 = n_;
      for (auto i : zset)
        if (!on(k1, i)) {
          z1 = i;
          break;
        }
      if (z1 == n_) continue;
      for (const auto& k2 : avoided_) {
        if (k2.cls == k1.cls || !on(k2, z1)) continue;
        std::vector<std::size_t> base;
        for (std::size_t i = 0; i < n_; ++i)
          if (on(k1, i) && on(k2, i)) base.push_back(i);
        std::vector<Hyperplane> through;
        for (const auto& h : avoided_)
          if (std::all_of(base.begin(), base.end(), [&](std::size_t i) { return on(h, i); })) through.push_back(h);
        if (static_cast<int>(through.size()) != a) continue;
        const bool covered = std::all_of(zset.begin(), zset.end(), [&](std::size_t i) {
          return std::any_of(through.begin(), through.end(), [&](const Hyperplane& h) { return on(h, i); });
        });
        if (!covered) continue;
        PencilMatch pm{{}, base, k1, k2};
        for (std::size_t c = 0; c < normals_.size(); ++c) {
          const Elem off = vals_[c][base.front()];
          if (!std::all_of(base.begin(), base.end(), [&](std::size_t i) { return vals_[c][i] == off; })) continue;
          if (hits_[c][off] > 0) pm.members.push_back({c, off});
        }
        return pm;
      }
    }
    return std::nullopt;
  }

  AffineFlat ambient(const Hyperplane& h) const {
    return HyperplaneWithin{hull_, normals_[h.cls], h.offset}.flat();
  }

  // Ambient flat {normal_1 . u = off_1, normal_2 . u = off_2}.
  AffineFlat ambient(const Hyperplane& h1, const Hyperplane& h2) const {
    const Field& f = *field_;
    const linalg::Mat rows{normals_[h1.cls], normals_[h2.cls]};
    auto u0 = linalg::solve(f, rows, {h1.offset, h2.offset}, static_cast<std::size_t>(d_));
    std::vector<Point> dirs;
    for (const auto& k : linalg::nullspace(f, rows, static_cast<std::size_t>(d_))) {
      Point img = hull_.point_from(k);
      for (std::size_t j = 0; j < img.size(); ++j) img[j] = f.sub(img[j], hull_.base()[j]);
      dirs.push_back(std::move(img));
    }
    return AffineFlat(f, hull_.point_from(*u0), std::move(dirs));
  }

 private:
  static AffineFlat make_hull(const FuncTable& t) {
    const auto s = support(t);
    if (s.empty()) throw PreconditionError("the zero function has no support to classify");
    return affine_hull(t.field(), t.vars(), s);
  }

  bool on(const Hyperplane& h, std::size_t i) const { return vals_[h.cls][i] == h.offset; }

  const Field* field_;
  int q_;
  AffineFlat hull_;
  int d_ = 0;
  std::size_t n_ = 0;
  std::size_t s_count_ = 0;
  std::vector<char> in_s_;
  std::vector<Point> normals_;
  std::vector<std::vector<Elem>> vals_;
  std::vector<std::vector<std::size_t>> hits_;
  std::vector<Hyperplane> avoided_;
};

}  // namespace detail

/// Checks the minimum weight structure: the support is q-s distinct parallel
/// flats of codim t+1 inside a flat of codim t. Returns the witness, or
/// nullopt when the structure is absent (which would contradict the
/// minimum weight characterization). Throws if weight(t) != W1.
inline std::optional<Classification> verify_min(const FuncTable& t, const CodeParams& p,
                                                std::size_t budget = kDefaultPointBudget) {
  if (t.order() != p.q || t.vars() != p.m) throw PreconditionError("table does not match the code parameters");
  const auto w = weight(t);
  if (w != min_weight(p))
    throw PreconditionError("weight " + std::to_string(w) + " is not the minimum weight " + std::to_string(min_weight(p)) + " of " + p.name());
  detail::LocalSupport local(t, budget);
  Classification c;
  c.regime_covered = true;
  c.hull = local.hull();
  if (p.r == p.max_degree()) {
    c.tag = Tag::MinWeightParallelStack;
    c.matched = {c.tag};
    c.members = {local.hull()};
    return c;
  }
  if (local.hull().codim() != p.t) return std::nullopt;
  auto stack = local.match_stack(p.q - p.s);
  if (!stack) return std::nullopt;
  c.tag = Tag::MinWeightParallelStack;
  c.matched = {c.tag};
  for (const auto& h : *stack) c.members.push_back(local.ambient(h));
  return c;
}

/// Decides which second weight configuration the support of t realizes.
/// Throws if weight(t) is not the second weight of p.
inline Classification classify_second(const FuncTable& t, const CodeParams& p, std::size_t budget = kDefaultPointBudget) {
  if (t.order() != p.q || t.vars() != p.m) throw PreconditionError("table does not match the code parameters");
  const auto rep = second_weight(p);
  if (!rep.w2) throw PreconditionError(p.name() + " has no second weight");
  const auto w = weight(t);
  if (w != *rep.w2)
    throw PreconditionError("weight " + std::to_string(w) + " is not the second weight " + std::to_string(*rep.w2) + " of " + p.name());

  detail::LocalSupport local(t, budget);
  const int q = p.q, m = p.m, t_ = p.t, s = p.s;
  const int d = local.dim();

  Classification c;
  c.hull = local.hull();
  c.regime_covered = true;

  std::optional<detail::LocalSupport::ParallelMatch> parallel_witness;
  std::optional<detail::LocalSupport::PencilMatch> pencil_witness;
  auto add = [&](Tag tag) { c.matched.push_back(tag); };

  auto try_parallel = [&](Tag tag, int k, int j) {
    if (auto mt = local.match_parallel(k, j)) {
      if (c.matched.empty()) parallel_witness = mt;
      add(tag);
    }
  };
  auto try_pencil = [&](Tag tag, int a) {
    if (auto mt = local.match_pencil(a)) {
      if (c.matched.empty()) pencil_witness = mt;
      add(tag);
    }
  };

  if (p.r == p.max_degree()) {
    if (d <= 1) add(Tag::LineSupported);
  } else if (t_ == m - 1 && s >= 1) {
    if (s == 1 && q >= 4 && d == 1 && local.full()) add(Tag::AffineFlatSupport);
    if (q >= 5 && s <= q - 4 && d <= 1) add(Tag::LineSupported);
    if (s >= q - 3 && d <= 2) add(Tag::PlaneContained);
  } else if (p.r == 1) {
    if (d == m && local.full()) add(Tag::AffineFlatSupport);
  } else if (s == 0) {
    if (d == m - t_ + 1) {
      try_parallel(Tag::S0Parallel, 2, 1);
      try_pencil(Tag::S0Pencil, q - 1);
    } else {
      c.note = "hull has dimension " + std::to_string(d) + ", expected " + std::to_string(m - t_ + 1);
    }
  } else if (s == 1) {
    if (q >= 4) {
      if (d == m - t_ && local.full()) add(Tag::AffineFlatSupport);
    } else if (d == m - t_ + 1) {
      try_parallel(Tag::Q3Fig2, 2, 2);
    } else {
      c.note = "hull has dimension " + std::to_string(d) + ", expected " + std::to_string(m - t_ + 1);
    }
  } else {
    if (d == m - t_) {
      try_parallel(Tag::TypeA, q - s + 1, 1);
      try_pencil(Tag::TypeB, s);
    } else {
      c.note = "hull has dimension " + std::to_string(d) + ", expected " + std::to_string(m - t_);
    }
  }

  if (c.matched.empty()) {
    c.tag = Tag::Unknown;
    if (c.note.empty()) c.note = "no configuration matches the support";
    return c;
  }
  c.tag = c.matched.front();
  switch (c.tag) {
    case Tag::AffineFlatSupport: c.members = {local.hull()}; break;
    case Tag::LineSupported:
    case Tag::PlaneContained:
      for (auto idx : support(t)) c.points.push_back(point_at(idx, q, m));
      break;
    case Tag::TypeA:
    case Tag::S0Parallel:
    case Tag::Q3Fig2:
      for (const auto& h : parallel_witness->members) c.members.push_back(local.ambient(h));
      for (const auto& h : parallel_witness->transversals) c.removed.push_back(local.ambient(h));
      break;
    case Tag::TypeB:
    case Tag::S0Pencil:
      for (const auto& h : pencil_witness->members) c.members.push_back(local.ambient(h));
      c.removed.push_back(local.ambient(pencil_witness->first, pencil_witness->second));
      break;
    default: break;
  }
  return c;
}

/// The tag a family's codewords are expected to receive.
inline Tag expected_tag(Family fam, const CodeParams& p) {
  switch (fam) {
    case Family::Min: return Tag::MinWeightParallelStack;
    case Family::TypeA: return Tag::TypeA;
    case Family::TypeB: return Tag::TypeB;
    case Family::S0Parallel: return Tag::S0Parallel;
    case Family::S0Pencil: return Tag::S0Pencil;
    case Family::S1Flat: return Tag::AffineFlatSupport;
    case Family::S1Ternary: return Tag::Q3Fig2;
    case Family::LastVariable:
      if (p.s == 1 && p.q >= 4) return Tag::AffineFlatSupport;
      if (p.q >= 5 && p.s <= p.q - 4) return Tag::LineSupported;
      return Tag::PlaneContained;
  }
  return Tag::Unknown;
}

/// Classifies t at whichever of W1 / W2 its weight equals.
inline Classification classify(const FuncTable& t, const CodeParams& p, std::size_t budget = kDefaultPointBudget) {
  const auto w = weight(t);
  if (w == min_weight(p)) {
    if (auto c = verify_min(t, p, budget)) return *c;
    Classification c;
    c.regime_covered = true;
    c.note = "minimum weight codeword without the parallel stack structure";
    return c;
  }
  return classify_second(t, p, budget);
}

}  // namespace grm
