#include <gtest/gtest.h>

#include <limits>

#include "twobridge/fraction.hpp"
#include "twobridge/lattice.hpp"

namespace twobridge {
namespace {

constexpr Int kMax = std::numeric_limits<Int>::max();
constexpr Int kMin = std::numeric_limits<Int>::min();

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

TEST(Checked, DetectsOverflow) {
  EXPECT_EQ(checked_add(kMax - 1, 1), kMax);
  EXPECT_EQ(code_of([] { checked_add(kMax, 1); }), ErrorCode::kOverflow);
  EXPECT_EQ(code_of([] { checked_sub(kMin, 1); }), ErrorCode::kOverflow);
  EXPECT_EQ(code_of([] { checked_mul(Int{1} << 32, Int{1} << 31); }), ErrorCode::kOverflow);
  EXPECT_EQ(code_of([] { checked_neg(kMin); }), ErrorCode::kOverflow);
}

TEST(Checked, ModularHelpers) {
  EXPECT_EQ(gcd(-12, 18), 6);
  EXPECT_EQ(gcd(0, 7), 7);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(mod_positive(-5, 9), 4);
  EXPECT_EQ(mod_inverse(4, 7), 2);
  EXPECT_EQ(mod_inverse(-4, 9), 2);
  EXPECT_EQ(code_of([] { mod_inverse(6, 9); }), ErrorCode::kNotCoprime);
}

TEST(Fraction, ReducesAndNormalizesSign) {
  const Fraction f(4, -6);
  EXPECT_EQ(f.num(), -2);
  EXPECT_EQ(f.den(), 3);
  EXPECT_EQ(f.to_string(), "-2/3");
  EXPECT_EQ(Fraction(6, 3).to_string(), "2");
}

TEST(Fraction, Arithmetic) {
  EXPECT_EQ(Fraction(1, 2) + Fraction(1, 3), Fraction(5, 6));
  EXPECT_EQ(Fraction(1, 2) - Fraction(1, 3), Fraction(1, 6));
  EXPECT_EQ(Fraction(2, 3) * Fraction(3, 4), Fraction(1, 2));
  EXPECT_EQ(Fraction(2, 3) / Fraction(4, 9), Fraction(3, 2));
  EXPECT_LT(Fraction(-1, 2), Fraction(1, 3));
  EXPECT_EQ(code_of([] { (void)(Fraction(1) / Fraction(0)); }), ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([] { Fraction(1, 0); }), ErrorCode::kDivisionByZero);
}

TEST(Lattice, Rank) {
  EXPECT_EQ(rank({}), 0);
  EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}}), 1);
  EXPECT_EQ(rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}), 2);
  EXPECT_EQ(rank({{2, 0}, {0, 3}}), 2);
}

TEST(Lattice, Determinant) {
  EXPECT_EQ(determinant({{2, 1}, {1, 3}}), 5);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  EXPECT_EQ(determinant({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 8);
}

TEST(Lattice, SubspaceNormalForm) {
  const std::vector<IntVector> gens = {{1, 1, 0}};
  const RationalSubspace w(3, gens);
  EXPECT_EQ(w.dimension(), 1);
  EXPECT_TRUE(w.contains(IntVector{-3, -3, 0}));
  EXPECT_FALSE(w.contains(IntVector{1, 0, 0}));
  EXPECT_EQ(w.normal_form(IntVector{1, 0, 2}), w.normal_form(IntVector{0, -1, 2}));
  EXPECT_NE(w.normal_form(IntVector{1, 0, 2}), w.normal_form(IntVector{0, 1, 2}));
}

}  // namespace
}  // namespace twobridge
