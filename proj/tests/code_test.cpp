#include <gtest/gtest.h>

#include "grm/code.hpp"
#include "oracles.hpp"

using namespace grm;

namespace {

int oracle_degree(const FuncTable& t) {
  const auto o = oracle::Gf::make(t.order());
  return oracle::degree(oracle::interpolate(o, std::vector<int>(t.values().begin(), t.values().end()), t.vars()));
}

std::vector<Elem> elems(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_r(4, 3, 5), (std::pair{1, 2}));
  EXPECT_EQ(decompose_r(3, 2, 2), (std::pair{1, 0}));
  EXPECT_EQ(decompose_r(5, 2, 0), (std::pair{0, 0}));
  EXPECT_EQ(decompose_r(3, 2, 4), (std::pair{2, 0}));
  EXPECT_THROW(decompose_r(3, 2, 5), PreconditionError);
  EXPECT_THROW(decompose_r(3, 2, -1), PreconditionError);
  EXPECT_THROW(CodeParams::make(6, 2, 1), PreconditionError);
}

TEST(MinWeight, Examples) {
  EXPECT_EQ(min_weight(CodeParams::make(4, 3, 5)), 8u);
  EXPECT_EQ(min_weight(CodeParams::make(3, 2, 2)), 3u);
  EXPECT_EQ(min_weight(CodeParams::make(3, 2, 4)), 1u);
  EXPECT_EQ(min_weight(CodeParams::make(3, 3, 3)), 6u);
}

TEST(SecondWeight, Examples) {
  EXPECT_EQ(second_weight(CodeParams::make(4, 3, 5)).w2, 9u);
  EXPECT_EQ(second_weight(CodeParams::make(3, 3, 3)).w2, 8u);
  EXPECT_EQ(second_weight(CodeParams::make(5, 2, 2)).w2, 16u);
  EXPECT_EQ(second_weight(CodeParams::make(3, 2, 2)).w2, 4u);
  EXPECT_EQ(second_weight(CodeParams::make(3, 2, 4)).w2, 2u);
  EXPECT_FALSE(second_weight(CodeParams::make(3, 2, 0)).w2.has_value());
  EXPECT_EQ(second_weight(CodeParams::make(4, 3, 5)).regime, Regime::SAtLeastTwo);
  EXPECT_EQ(second_weight(CodeParams::make(3, 3, 3)).regime, Regime::SOneTernary);
  EXPECT_EQ(second_weight(CodeParams::make(5, 2, 2)).regime, Regime::BelowQ);
}

TEST(SecondWeight, BinaryFieldRejected) { EXPECT_THROW(second_weight(CodeParams::make(2, 3, 1)), PreconditionError); }

TEST(SecondWeight, OverlappingBranchesAgree) {
  for (int q : {3, 4, 5, 7, 8, 9})
    for (int m = 1; m <= 4; ++m)
      for (int r = 1; r <= m * (q - 1); ++r) {
        const auto p = CodeParams::make(q, m, r);
        const auto cands = second_weight_candidates(p);
        ASSERT_FALSE(cands.empty()) << p.name();
        for (const auto& c : cands) EXPECT_EQ(c.w2, second_weight(p).w2) << p.name() << " " << regime_name(c.regime);
      }
}

TEST(IsCodeword, Examples) {
  const Field& f = Field::get(3);
  EXPECT_TRUE(is_codeword(FuncTable(f, 2), 0));
  EXPECT_FALSE(is_codeword(point_indicator(f, Point{0, 1}), 3));
  EXPECT_TRUE(is_codeword(point_indicator(f, Point{0, 1}), 4));
  EXPECT_TRUE(is_codeword(construct_second_A(CodeParams::make(4, 3, 5)), 5));
}

TEST(ConstructMin, Examples) {
  const auto a = construct_min(CodeParams::make(4, 3, 5), elems({1, 2}));
  EXPECT_EQ(weight(a), 8u);
  EXPECT_LE(oracle_degree(a), 5);
  const auto line = construct_min(CodeParams::make(3, 2, 2));
  EXPECT_EQ(weight(line), 3u);
  EXPECT_EQ(affine_hull(line.field(), 2, support(line)).dim(), 1);
  EXPECT_EQ(weight(construct_min(CodeParams::make(5, 2, 3), elems({0, 1, 2}))), 10u);
  EXPECT_THROW(construct_min(CodeParams::make(4, 3, 5), elems({1, 1})), PreconditionError);
  EXPECT_THROW(construct_min(CodeParams::make(4, 3, 5), elems({1})), PreconditionError);
}

TEST(ConstructSecondA, Examples) {
  EXPECT_EQ(weight(construct_second_A(CodeParams::make(4, 3, 5))), 9u);
  EXPECT_EQ(weight(construct_second_A(CodeParams::make(4, 2, 2))), 9u);
  EXPECT_EQ(weight(construct_second_A(CodeParams::make(5, 3, 2))), 80u);
  EXPECT_THROW(construct_second_A(CodeParams::make(4, 3, 4)), PreconditionError);  // s = 1
  EXPECT_THROW(construct_second_A(CodeParams::make(3, 3, 3)), PreconditionError);
}

TEST(ConstructSecondB, Examples) {
  EXPECT_EQ(weight(construct_second_B(CodeParams::make(4, 3, 5), elems({0, 1}))), 9u);
  const auto b = construct_second_B(CodeParams::make(4, 2, 2), elems({0, 1}));
  EXPECT_EQ(weight(b), 9u);
  EXPECT_EQ(b.size() - weight(b), 7u);
  EXPECT_EQ(weight(construct_second_B(CodeParams::make(5, 2, 2), elems({0, 1}))), 16u);
  EXPECT_THROW(construct_second_B(CodeParams::make(4, 3, 5), elems({1, 1})), PreconditionError);
}

TEST(ConstructSecondS0, Examples) {
  const auto par = construct_second_s0(CodeParams::make(3, 2, 2), S0Variant::Parallel);
  const auto pen = construct_second_s0(CodeParams::make(3, 2, 2), S0Variant::Pencil);
  EXPECT_EQ(weight(par), 4u);
  EXPECT_EQ(weight(pen), 4u);
  EXPECT_LE(oracle_degree(par), 2);
  EXPECT_LE(oracle_degree(pen), 2);
  EXPECT_EQ(weight(construct_second_s0(CodeParams::make(4, 3, 3), S0Variant::Parallel)), 24u);
  EXPECT_THROW(construct_second_s0(CodeParams::make(4, 3, 4), S0Variant::Parallel), PreconditionError);
}

TEST(ConstructSecondS1, Examples) {
  EXPECT_EQ(weight(construct_second_s1(CodeParams::make(4, 3, 4))), 16u);
  EXPECT_EQ(construct_second_s1(CodeParams::make(5, 2, 1)), FuncTable::constant(Field::get(5), 2, 1));
  EXPECT_EQ(weight(construct_second_s1(CodeParams::make(4, 3, 7))), 4u);
  try {
    construct_second_s1(CodeParams::make(3, 3, 3));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("s1-q3"), std::string::npos);
  }
}

TEST(ConstructSecondS1Q3, Examples) {
  const auto t = construct_second_s1_q3(CodeParams::make(3, 3, 3));
  EXPECT_EQ(weight(t), 8u);
  EXPECT_LE(oracle_degree(t), 3);
  EXPECT_EQ(weight(construct_second_s1_q3(CodeParams::make(3, 4, 3))), 24u);
  EXPECT_EQ(weight(construct_second_s1_q3(CodeParams::make(3, 4, 5))), 8u);
  EXPECT_THROW(construct_second_s1_q3(CodeParams::make(3, 3, 5)), PreconditionError);
}

TEST(ConstructLastVariable, Examples) {
  EXPECT_EQ(weight(construct_tm1_second(CodeParams::make(5, 2, 5))), 5u);
  EXPECT_EQ(weight(construct_tm1_second(CodeParams::make(5, 2, 6))), 4u);
  EXPECT_EQ(weight(construct_tm1_second(CodeParams::make(4, 3, 8))), 3u);
  EXPECT_THROW(construct_tm1_second(CodeParams::make(5, 2, 2)), PreconditionError);
}

TEST(Families, WeightsAndDegreesAgreeWithOracle) {
  for (int q : {3, 4, 5})
    for (int m : {2, 3})
      for (int r = 0; r <= m * (q - 1); ++r) {
        const auto p = CodeParams::make(q, m, r);
        for (auto fam : kAllFamilies) {
          if (!family_applies(fam, p)) continue;
          const auto t = construct(fam, p);
          EXPECT_EQ(weight(t), family_weight(fam, p)) << family_name(fam) << " " << p.name();
          EXPECT_LE(oracle_degree(t), r) << family_name(fam) << " " << p.name();
        }
      }
}

TEST(Families, NamesRoundTrip) {
  for (auto fam : kAllFamilies) EXPECT_EQ(parse_family(family_name(fam)), fam);
  EXPECT_FALSE(parse_family("C").has_value());
}

TEST(PointMass, Parallelogram) {
  const Field& f = Field::get(3);
  const std::vector<Point> pts{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  const auto res = construct_point_mass(f, pts, elems({1, 1, 2, 2}));
  EXPECT_EQ(weight(res.table), 4u);
  EXPECT_TRUE(res.sum_zero);
  EXPECT_TRUE(res.moment_zero);
  EXPECT_EQ(res.certified_bound, 2);
  EXPECT_LE(res.degree, 2);
  EXPECT_EQ(res.degree, oracle_degree(res.table));
}

TEST(PointMass, ThreePoints) {
  const Field& f = Field::get(3);
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}};
  const auto res = construct_point_mass(f, pts, elems({1, 1, 1}));
  EXPECT_EQ(weight(res.table), 3u);
  EXPECT_TRUE(res.sum_zero);
  EXPECT_EQ(res.certified_bound, 3);
  EXPECT_LE(res.degree, 3);
  EXPECT_EQ(res.degree, oracle_degree(res.table));
}

TEST(PointMass, SinglePointHasFullDegree) {
  const Field& f = Field::get(4);
  const std::vector<Point> pts{{1, 2, 3}};
  const auto res = construct_point_mass(f, pts, elems({1}));
  EXPECT_EQ(res.degree, 9);
  const std::vector<Point> twice{{1, 2}, {1, 2}};
  EXPECT_THROW(construct_point_mass(f, twice, elems({1, 1})), PreconditionError);
}
