#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "monideal/errors.hpp"
#include "monideal/monomial.hpp"

using namespace monideal;

TEST(Monomial, DegreeIsSumOfExponents) {
  Monomial u{3, 0, 4};
  EXPECT_EQ(u.nvars(), 3u);
  EXPECT_EQ(u.degree(), 7);
  EXPECT_TRUE(Monomial::one(4).is_one());
  EXPECT_EQ(Monomial::pure_power(3, 1, 5), (Monomial{0, 5, 0}));
}

TEST(Monomial, RejectsNegativeExponents) { EXPECT_THROW((Monomial{1, -1}), ArgumentError); }

TEST(Monomial, Divides) {
  Monomial x2{2, 0}, x3{3, 0}, y{0, 1}, x2y{2, 1};
  EXPECT_TRUE(x2.divides(x3));
  EXPECT_FALSE(x3.divides(x2));
  EXPECT_FALSE(y.divides(x3));
  EXPECT_TRUE(y.divides(x2y));
  EXPECT_TRUE(x2.divides(x2));
  EXPECT_TRUE(Monomial::one(2).divides(y));
  // different ambient rings never divide
  EXPECT_FALSE((Monomial{0}).divides(Monomial{0, 1}));
}

TEST(Monomial, ProductAddsExponents) {
  EXPECT_EQ((Monomial{3, 0}) * (Monomial{1, 2}), (Monomial{4, 2}));
  EXPECT_THROW((Monomial{1}) * (Monomial{1, 2}), DimensionError);
}

TEST(Monomial, OverflowIsAnError) {
  const auto big = std::numeric_limits<Exponent>::max() - 1;
  Monomial u{big, 0};
  EXPECT_THROW(u * Monomial({2, 0}), OverflowError);
  EXPECT_THROW(u.pow(2), OverflowError);
  // degree overflow is caught even when every single exponent fits
  EXPECT_THROW((Monomial{big, big}), OverflowError);
}

TEST(Monomial, PowAndConcat) {
  EXPECT_EQ((Monomial{2, 1}).pow(3), (Monomial{6, 3}));
  EXPECT_EQ((Monomial{2, 1}).pow(0), Monomial::one(2));
  EXPECT_EQ((Monomial{1}).concat(Monomial{0, 2}), (Monomial{1, 0, 2}));
}

TEST(Monomial, PurePowerVariable) {
  EXPECT_EQ((Monomial{0, 4, 0}).pure_power_variable(), 1);
  EXPECT_EQ((Monomial{1, 1}).pure_power_variable(), -1);
  EXPECT_EQ(Monomial::one(3).pure_power_variable(), -1);
}

TEST(Monomial, CanonicalOrderIsDegreeThenLexDescending) {
  std::vector<Monomial> v{{0, 4}, {1, 3}, {4, 0}, {3, 1}};
  std::sort(v.begin(), v.end(), CanonicalLess{});
  std::vector<Monomial> want{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
  EXPECT_EQ(v, want);
  EXPECT_TRUE(CanonicalLess{}(Monomial{0, 3}, Monomial{4, 0}));
}

TEST(Monomial, ToString) {
  EXPECT_EQ((Monomial{2, 0, 1}).to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial::one(2).to_string(), "1");
}
