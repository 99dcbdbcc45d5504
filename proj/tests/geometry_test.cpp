#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grm/code.hpp"
#include "grm/geometry.hpp"

using namespace grm;

namespace {

FuncTable random_table(const Field& f, int m, std::mt19937_64& rng) {
  FuncTable t(f, m);
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, static_cast<Elem>(rng() % f.order()));
  return t;
}

}  // namespace

TEST(AffineHull, Examples) {
  const Field& f = Field::get(3);
  const std::vector<Point> three{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  const auto h = affine_hull(f, three);
  EXPECT_EQ(h.dim(), 2);
  EXPECT_EQ(h.codim(), 1);
  for (const auto& x : three) EXPECT_TRUE(h.contains(x));
  EXPECT_FALSE(h.contains(Point{0, 0, 1}));

  const std::vector<Point> one{{2, 1, 0}};
  EXPECT_EQ(affine_hull(f, one).dim(), 0);
  EXPECT_THROW(affine_hull(f, std::vector<Point>{}), PreconditionError);
}

TEST(AffineHull, SupportOfProductSpansPlane) {
  const Field& f = Field::get(4);
  const auto x1 = coordinate(f, 2, 0), x2 = coordinate(f, 2, 1);
  const auto t = x2 * (x1 - FuncTable::constant(f, 2, 1));
  const auto s = support(t);
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(affine_hull(f, 2, s).dim(), 2);
}

TEST(AffineHull, IsSmallestContainingFlat) {
  std::mt19937_64 rng(3);
  const Field& f = Field::get(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> pts;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) pts.push_back(point_at(rng() % 81, 3, 4));
    const auto h = affine_hull(f, pts);
    for (const auto& x : pts) EXPECT_TRUE(h.contains(x));
    // Every point of the hull is an affine combination of the given points:
    // count points reachable by iterated lines through pairs.
    std::set<std::size_t> closure;
    for (const auto& x : pts) closure.insert(point_index(x, 3));
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<std::size_t> cur(closure.begin(), closure.end());
      for (auto a : cur)
        for (auto b : cur) {
          const auto pa = point_at(a, 3, 4), pb = point_at(b, 3, 4);
          Point c(4);
          for (int j = 0; j < 4; ++j) c[j] = f.sub(f.add(pa[j], pa[j]), pb[j]);  // 2a - b on the line ab
          if (closure.insert(point_index(c, 3)).second) grew = true;
        }
    }
    EXPECT_EQ(closure.size(), h.size());
  }
}

TEST(AffineFlat, PointsAndMembership) {
  const Field& f = Field::get(4);
  const AffineFlat flat(f, Point{1, 2, 3}, {Point{1, 1, 0}, Point{0, 1, 1}});
  EXPECT_EQ(flat.dim(), 2);
  const auto pts = flat.points();
  EXPECT_EQ(pts.size(), 16u);
  std::set<Point> uniq(pts.begin(), pts.end());
  EXPECT_EQ(uniq.size(), 16u);
  std::size_t members = 0;
  for (std::size_t i = 0; i < 64; ++i) members += flat.contains(point_at(i, 4, 3));
  EXPECT_EQ(members, 16u);
  EXPECT_THROW(AffineFlat(f, Point{0, 0, 0}, {Point{1, 1, 0}, Point{2, 2, 0}}), PreconditionError);
  EXPECT_THROW(flat.point_indices(8), BudgetError);
}

TEST(AffineFlat, CanonicalFormMakesEqualFlatsEqual) {
  const Field& f = Field::get(3);
  const AffineFlat a(f, Point{1, 0, 0}, {Point{1, 1, 0}});
  const AffineFlat b(f, Point{2, 1, 0}, {Point{2, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.parallel_to(AffineFlat(f, Point{0, 0, 1}, {Point{1, 1, 0}})));
}

TEST(Indicator, WeightAndDegree) {
  const Field& f3 = Field::get(3);
  const std::vector<int> ax{0};
  const std::vector<Elem> val{0};
  const auto line = indicator(AffineFlat::coordinate_flat(f3, 2, ax, val));
  EXPECT_EQ(weight(line), 3u);
  EXPECT_EQ(degree(line), 2);
  EXPECT_EQ(indicator(AffineFlat::whole_space(f3, 2)), FuncTable::constant(f3, 2, 1));

  std::mt19937_64 rng(5);
  const Field& f4 = Field::get(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = AffineMap::random(f4, 3, rng);
    const std::vector<int> axes{0, 1};
    const std::vector<Elem> vals{1, 2};
    const auto flat = map_flat(AffineFlat::coordinate_flat(f4, 3, axes, vals), g);
    const auto t = indicator(flat);
    EXPECT_EQ(weight(t), 4u);
    EXPECT_EQ(degree(t), 6);
  }
}

TEST(AffineMap, IdentityAndTranslation) {
  const Field& f = Field::get(5);
  std::mt19937_64 rng(9);
  const auto t = random_table(f, 2, rng);
  EXPECT_EQ(apply_map(t, AffineMap::identity(f, 2)), t);
  const auto delta = point_indicator(f, Point{1, 3});
  // t o g with g(x) = x + (1, 1): nonzero where x + (1,1) = (1,3), i.e. x = (0,2)
  EXPECT_EQ(apply_map(delta, AffineMap::translation(f, Point{1, 1})), point_indicator(f, Point{0, 2}));
  linalg::Mat singular{{1, 2}, {2, 4}};
  EXPECT_THROW(AffineMap(f, singular, Point{0, 0}), PreconditionError);
}

TEST(AffineMap, InversePairs) {
  std::mt19937_64 rng(21);
  const Field& f = Field::get(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = AffineMap::random(f, 3, rng);
    const auto h = g.inverse();
    for (std::size_t i = 0; i < 512; i += 37) {
      const auto x = point_at(i, 8, 3);
      EXPECT_EQ(h.apply(g.apply(x)), x);
    }
  }
}

TEST(AffineMap, PreservesWeightAndDegree) {
  std::mt19937_64 rng(23);
  for (auto [q, m] : {std::pair{3, 2}, std::pair{4, 2}}) {
    const Field& f = Field::get(q);
    for (int k = 0; k < 20; ++k) {
      const auto t = random_table(f, m, rng);
      const auto w = weight(t);
      const auto d = degree(t);
      for (int j = 0; j < 100; ++j) {
        const auto img = apply_map(t, AffineMap::random(f, m, rng));
        ASSERT_EQ(weight(img), w);
        ASSERT_EQ(degree(img), d);
      }
    }
  }
}

TEST(Hyperplanes, ClassCounts) {
  struct Case {
    int q, d;
    std::size_t classes;
  };
  for (auto c : {Case{3, 2, 4}, Case{4, 2, 5}, Case{3, 3, 13}}) {
    const Field& f = Field::get(c.q);
    const auto classes = hyperplanes_within(AffineFlat::whole_space(f, c.d));
    ASSERT_EQ(classes.size(), c.classes);
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& cls : classes) {
      ASSERT_EQ(cls.members.size(), static_cast<std::size_t>(c.q));
      std::vector<char> seen(point_count(c.q, c.d), 0);
      for (const auto& h : cls.members) {
        auto idx = h.flat().point_indices();
        EXPECT_EQ(idx.size(), point_count(c.q, c.d - 1));
        for (auto i : idx) {
          EXPECT_FALSE(seen[i]) << "members of a class must be disjoint";
          seen[i] = 1;
        }
        std::sort(idx.begin(), idx.end());
        distinct.insert(idx);
      }
    }
    EXPECT_EQ(distinct.size(), c.classes * static_cast<std::size_t>(c.q));
  }
  EXPECT_THROW(hyperplanes_within(AffineFlat::whole_space(Field::get(3), 0)), PreconditionError);
}

TEST(Hyperplanes, WithinAProperFlat) {
  const Field& f = Field::get(3);
  const AffineFlat plane(f, Point{1, 1, 1, 0}, {Point{1, 0, 1, 0}, Point{0, 1, 0, 2}});
  const auto classes = hyperplanes_within(plane);
  ASSERT_EQ(classes.size(), 4u);
  for (const auto& cls : classes)
    for (const auto& h : cls.members) {
      const auto line = h.flat();
      EXPECT_EQ(line.dim(), 1);
      EXPECT_TRUE(plane.contains(line));
    }
}

TEST(SectionCounts, Examples) {
  const Field& f = Field::get(3);
  const auto classes = hyperplanes_within(AffineFlat::whole_space(f, 2));
  const auto member = classes[0].members[1].flat().points();
  const auto counts = section_counts(member, classes[0]);
  EXPECT_EQ(counts, (std::vector<std::size_t>{0, 3, 0}));

  const auto all = AffineFlat::whole_space(f, 2).points();
  for (const auto& cls : classes) EXPECT_EQ(section_counts(all, cls), (std::vector<std::size_t>{3, 3, 3}));
}

TEST(SectionCounts, TypeASupport) {
  const auto p = CodeParams::make(4, 2, 2);
  const auto t = construct_second_A(p);
  std::vector<Point> s;
  for (auto i : support(t)) s.push_back(point_at(i, 4, 2));
  bool found = false;
  for (const auto& cls : hyperplanes_within(AffineFlat::whole_space(p.field(), 2))) {
    auto c = section_counts(s, cls);
    std::size_t total = 0;
    for (auto x : c) total += x;
    EXPECT_EQ(total, s.size());
    std::sort(c.begin(), c.end());
    found = found || c == std::vector<std::size_t>{0, 3, 3, 3};
  }
  EXPECT_TRUE(found);
}

TEST(CanonicalNormals, FirstNonzeroIsOne) {
  const auto normals = canonical_normals(5, 3);
  EXPECT_EQ(normals.size(), 31u);
  for (const auto& n : normals) {
    auto it = std::find_if(n.begin(), n.end(), [](Elem v) { return v != 0; });
    ASSERT_NE(it, n.end());
    EXPECT_EQ(*it, 1);
  }
}
