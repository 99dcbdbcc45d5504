#include <gtest/gtest.h>

#include "grm/classify.hpp"
#include "grm/search.hpp"
#include "oracles.hpp"

using namespace grm;

TEST(MonomialBasis, Counts) {
  EXPECT_EQ(monomial_basis(3, 2, 2).size(), 6u);
  EXPECT_EQ(monomial_basis(4, 2, 3).size(), 10u);
  EXPECT_EQ(monomial_basis(5, 3, 0).size(), 1u);
  EXPECT_EQ(monomial_basis(3, 2, 4).size(), 9u);
  EXPECT_THROW(monomial_basis(3, 2, 5), PreconditionError);
}

TEST(MonomialBasis, LexicographicAndReduced) {
  const auto b = monomial_basis(4, 3, 4);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_LT(b[i - 1], b[i]);
  for (const auto& mono : b) {
    EXPECT_LE(total_degree(mono), 4);
    for (auto e : mono) EXPECT_LE(e, 3);
  }
}

class HistogramOracle : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(HistogramOracle, MatchesDirectEvaluation) {
  const auto [q, m, r] = GetParam();
  const auto p = CodeParams::make(q, m, r);
  EnumOptions opt;
  opt.max_kept = 0;
  const auto rep = enumerate_low_weight(p, opt);
  auto expect = oracle::weight_histogram(oracle::Gf::make(q), m, r);
  expect.erase(0);
  EXPECT_EQ(rep.histogram, (std::map<std::size_t, std::uint64_t>(expect.begin(), expect.end())));
}

INSTANTIATE_TEST_SUITE_P(Small, HistogramOracle,
                         ::testing::Values(std::tuple{3, 2, 1}, std::tuple{3, 2, 2}, std::tuple{3, 2, 3}, std::tuple{4, 2, 2},
                                           std::tuple{4, 1, 2}, std::tuple{3, 3, 1}, std::tuple{5, 2, 1}));

TEST(Enumerate, ObservedWeightsMatchFormulas) {
  struct Case {
    int q, m, r;
    std::size_t w1, w2;
  };
  for (auto c : {Case{3, 2, 1, 6, 9}, Case{3, 2, 2, 3, 4}, Case{3, 2, 3, 2, 3}, Case{4, 2, 2, 8, 9}, Case{4, 2, 3, 4, 6},
                 Case{5, 2, 2, 15, 16}, Case{3, 3, 2, 9, 12}, Case{4, 1, 2, 2, 3}}) {
    const auto p = CodeParams::make(c.q, c.m, c.r);
    EnumOptions opt;
    opt.max_kept = 0;
    const auto rep = enumerate_low_weight(p, opt);
    EXPECT_EQ(rep.observed_w1, c.w1) << p.name();
    EXPECT_EQ(rep.observed_w2, c.w2) << p.name();
    EXPECT_EQ(rep.observed_w1, min_weight(p));
    EXPECT_EQ(rep.observed_w2, second_weight(p).w2);
    // Scalar multiples share a support.
    EXPECT_EQ(rep.histogram.at(c.w1) % static_cast<std::uint64_t>(c.q - 1), 0u);
    std::uint64_t total = 1;
    for (auto [w, n] : rep.histogram) total += n;
    EXPECT_EQ(total, rep.total);
  }
}

TEST(Enumerate, AffineCodeHasTwoWeights) {
  const auto rep = enumerate_low_weight(CodeParams::make(3, 2, 1));
  EXPECT_EQ(rep.histogram, (std::map<std::size_t, std::uint64_t>{{6, 24}, {9, 2}}));
}

TEST(Enumerate, KeptWordsAreCodewordsOfTheirWeight) {
  const auto p = CodeParams::make(4, 2, 2);
  EnumOptions opt;
  opt.cutoff = 9;
  const auto rep = enumerate_low_weight(p, opt);
  EXPECT_EQ(rep.words.size(), rep.histogram.at(8) + rep.histogram.at(9));
  for (std::size_t i = 0; i < rep.words.size(); ++i) {
    const auto t = rep.table(rep.words[i]);
    EXPECT_EQ(weight(t), rep.words[i].weight);
    EXPECT_TRUE(is_codeword(t, 2));
    if (i) {
      EXPECT_LT(rep.words[i - 1].index, rep.words[i].index);
    }
  }
  // The coefficient vector reproduces the table.
  const auto basis = monomial_basis(4, 2, 2);
  const auto& w = rep.words.front();
  ReducedPoly poly(p.field(), 2);
  const auto c = codeword_coefficients(p, w.index);
  for (std::size_t j = 0; j < basis.size(); ++j) poly.add_term(basis[j], c[j]);
  EXPECT_EQ(to_table(poly), rep.table(w));
}

TEST(Enumerate, JobsDoNotChangeTheReport) {
  const auto p = CodeParams::make(4, 2, 3);
  EnumOptions one, four;
  one.max_kept = four.max_kept = 5;
  four.jobs = 4;
  const auto a = enumerate_low_weight(p, one);
  const auto b = enumerate_low_weight(p, four);
  EXPECT_EQ(a.histogram, b.histogram);
  ASSERT_EQ(a.words.size(), b.words.size());
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    EXPECT_EQ(a.words[i].index, b.words[i].index);
    EXPECT_EQ(a.words[i].values, b.words[i].values);
  }
}

TEST(Enumerate, BudgetExceeded) {
  EnumOptions opt;
  opt.budget = 1000;
  try {
    enumerate_low_weight(CodeParams::make(4, 2, 2), opt);
    FAIL();
  } catch (const BudgetError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("dimension 6"), std::string::npos);
    EXPECT_NE(msg.find("4096"), std::string::npos);
  }
}

TEST(OrbitSamples, Deterministic) {
  const auto p = CodeParams::make(4, 3, 5);
  const auto t = construct_second_A(p);
  const auto a = orbit_samples(t, 10, 42);
  const auto b = orbit_samples(t, 10, 42);
  const auto c = orbit_samples(t, 10, 43);
  ASSERT_EQ(a.size(), 10u);
  EXPECT_EQ(a.front(), t);
  EXPECT_EQ(orbit_samples(t, 1, 42).front(), t);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_EQ(weight(a[i]), weight(t));
    EXPECT_EQ(classify_second(a[i], p).tag, Tag::TypeA);
  }
  bool differs = false;
  for (std::size_t i = 1; i < a.size(); ++i) differs = differs || !(a[i] == c[i]);
  EXPECT_TRUE(differs);
  EXPECT_THROW(orbit_samples(t, 0, 1), PreconditionError);
}
