#include <gtest/gtest.h>

#include "grm/field.hpp"
#include "oracles.hpp"

using grm::Elem;
using grm::Field;

class FieldTables : public ::testing::TestWithParam<int> {};

TEST_P(FieldTables, MatchPolynomialArithmetic) {
  const int q = GetParam();
  const Field& f = Field::get(q);
  const auto o = oracle::Gf::make(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(Elem(a), Elem(b)), o.add(a, b)) << a << "+" << b;
      EXPECT_EQ(f.mul(Elem(a), Elem(b)), o.mul(a, b)) << a << "*" << b;
      EXPECT_EQ(f.sub(Elem(a), Elem(b)), o.sub(a, b));
    }
}

TEST_P(FieldTables, SatisfyAxioms) { EXPECT_EQ(grm::check_field_axioms(Field::get(GetParam())), ""); }

TEST_P(FieldTables, InversesAndPowers) {
  const int q = GetParam();
  const Field& f = Field::get(q);
  for (int a = 1; a < q; ++a) {
    EXPECT_EQ(f.mul(Elem(a), f.inv(Elem(a))), 1);
    EXPECT_EQ(f.pow(Elem(a), q - 1), 1);  // multiplicative group has order q-1
    EXPECT_EQ(f.pow(Elem(a), q), a);
  }
  EXPECT_EQ(f.pow(0, 0), 1);
  EXPECT_EQ(f.pow(0, 3), 0);
  EXPECT_THROW(f.inv(0), grm::PreconditionError);
}

TEST_P(FieldTables, CharacteristicAnnihilatesOne) {
  const Field& f = Field::get(GetParam());
  Elem acc = 0;
  for (int i = 0; i < f.characteristic(); ++i) acc = f.add(acc, 1);
  EXPECT_EQ(acc, 0);
  EXPECT_EQ(f.from_int(f.characteristic()), 0);
  EXPECT_EQ(f.from_int(-1), f.neg(1));
}

INSTANTIATE_TEST_SUITE_P(AllOrders, FieldTables, ::testing::Values(2, 3, 4, 5, 7, 8, 9));

TEST(Field, DefiningPolynomials) {
  EXPECT_EQ(Field::get(4).irreducible(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(Field::get(8).irreducible(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(Field::get(9).irreducible(), (std::vector<int>{1, 0, 1}));
  EXPECT_TRUE(Field::get(5).irreducible().empty());
  EXPECT_EQ(Field::get(9).characteristic(), 3);
  EXPECT_EQ(Field::get(9).extension_degree(), 2);
}

TEST(Field, Gf4AlphaSquaredIsAlphaPlusOne) {
  const Field& f = Field::get(4);
  EXPECT_EQ(f.mul(2, 2), 3);
  EXPECT_EQ(f.add(1, 1), 0);
}

TEST(Field, Gf9AlphaSquaredIsMinusOne) {
  const Field& f = Field::get(9);
  EXPECT_EQ(f.mul(3, 3), 2);
}

TEST(Field, UnsupportedOrdersRejected) {
  for (int q : {0, 1, 6, 10, 11, 16, 27}) {
    EXPECT_FALSE(Field::supported(q));
    try {
      Field f(q);
      FAIL() << "accepted q = " << q;
    } catch (const grm::PreconditionError& e) {
      EXPECT_NE(std::string(e.what()).find("9"), std::string::npos) << "message should list the supported orders";
    }
  }
}

TEST(Field, SharedInstances) { EXPECT_EQ(&Field::get(7), &Field::get(7)); }
