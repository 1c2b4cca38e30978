#include <gtest/gtest.h>

#include <random>

#include "circuit/ratio.hpp"

namespace circuit {
namespace {

bool lowest_terms(const Ratio& r) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return g == 1 && r.den() > 0;
}

TEST(RatioTest, ParsesCanonicalForms) {
  EXPECT_EQ(Ratio::parse("3/4"), Ratio(3, 4));
  EXPECT_EQ(Ratio::parse("-6/8"), Ratio(-3, 4));
  EXPECT_EQ(Ratio::parse("+5"), Ratio(5));
  EXPECT_EQ(Ratio::parse("0/7"), Ratio(0));
  EXPECT_EQ(Ratio::parse("6097/6144").str(), "6097/6144");
}

TEST(RatioTest, RejectsMalformedText) {
  for (const char* bad : {"", "2.5", "1e3", "1/0", "/3", "3/", "- 3", "1/-2", "a", "1//2", "0x10"})
    EXPECT_THROW(Ratio::parse(bad), std::invalid_argument) << bad;
}

TEST(RatioTest, FormatsWithoutUnitDenominator) {
  EXPECT_EQ(Ratio(4, 2).str(), "2");
  EXPECT_EQ(Ratio(-10, 4).str(), "-5/2");
  EXPECT_EQ(Ratio(0).str(), "0");
}

TEST(RatioTest, ArithmeticIsExact) {
  Ratio a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Ratio(1, 2));
  EXPECT_EQ(a - b, Ratio(1, 6));
  EXPECT_EQ(a * b, Ratio(1, 18));
  EXPECT_EQ(a / b, Ratio(2));
  EXPECT_EQ(Ratio(22) + Ratio(9, 16), Ratio(361, 16));
  EXPECT_THROW(a / Ratio(0), std::domain_error);
  EXPECT_THROW(Ratio(1, 0), std::domain_error);
}

TEST(RatioTest, FloorCeilAndMod) {
  EXPECT_EQ(Ratio(7, 2).floor(), Ratio(3));
  EXPECT_EQ(Ratio(-7, 2).floor(), Ratio(-4));
  EXPECT_EQ(Ratio(-7, 2).ceil(), Ratio(-3));
  EXPECT_EQ(mod(Ratio(-10), Ratio(100)), Ratio(90));
  EXPECT_EQ(mod(Ratio(100), Ratio(100)), Ratio(0));
  EXPECT_EQ(mod(Ratio(-115, 4), Ratio(100)), Ratio(285, 4));
}

TEST(RatioTest, LargeValuesStayExact) {
  Ratio x(1);
  for (int i = 0; i < 60; ++i) x *= Ratio(6144, 116);
  for (int i = 0; i < 60; ++i) x /= Ratio(6144, 116);
  EXPECT_EQ(x, Ratio(1));
}

class RatioAlgebra : public ::testing::Test {
 protected:
  Ratio draw() {
    std::uniform_int_distribution<long> num(-500, 500), den(1, 97);
    return Ratio(num(rng_), den(rng_));
  }
  std::mt19937_64 rng_{20240601};
};

TEST_F(RatioAlgebra, FieldLawsHoldOnRandomValues) {
  for (int i = 0; i < 300; ++i) {
    Ratio a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_TRUE(lowest_terms(a * b + c));
    // comparison agrees with cross multiplication
    mpz_class lhs = a.num() * b.den(), rhs = b.num() * a.den();
    EXPECT_EQ(a < b, lhs < rhs);
    EXPECT_EQ(a == b, lhs == rhs);
  }
}

}  // namespace
}  // namespace circuit
