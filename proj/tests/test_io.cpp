#include <gtest/gtest.h>

#include <random>

#include "monideal/errors.hpp"
#include "monideal/io.hpp"
#include "test_support.hpp"

using namespace monideal;

TEST(IdealDocument, Format) {
  EXPECT_EQ(to_document(basic_ideal(2, 3, 1)),
            "{\n  \"nvars\": 2,\n  \"gens\": [\n    [4, 0],\n    [3, 1],\n    [1, 3],\n    [0, 4]\n  ]\n}\n");
  EXPECT_EQ(to_document(MonomialIdeal(3)), "{\n  \"nvars\": 3,\n  \"gens\": []\n}\n");
}

TEST(IdealDocument, ParserMinimalizes) {
  auto I = parse_document(R"({"nvars": 2, "gens": [[2, 0], [3, 0], [0, 1]]})");
  EXPECT_EQ(I.generators(), (std::vector<Monomial>{{0, 1}, {2, 0}}));
  EXPECT_TRUE(parse_document(R"({"nvars": 2, "gens": [[0, 0]]})").is_unit());
  EXPECT_TRUE(parse_document(R"({"gens": [], "nvars": 1})").is_zero());
}

TEST(IdealDocument, RoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto I = minimalize(monideal::testing::random_monomials(rng, n, trial % 12, 9), n);
    EXPECT_EQ(parse_document(to_document(I)), I);
  }
}

TEST(IdealDocument, Errors) {
  EXPECT_THROW(parse_document("not json"), ArgumentError);
  EXPECT_THROW(parse_document(R"({"nvars": 2})"), ArgumentError);
  EXPECT_THROW(parse_document(R"({"nvars": 0, "gens": []})"), ArgumentError);
  EXPECT_THROW(parse_document(R"({"nvars": 2, "gens": [[1, 2, 3]]})"), DimensionError);
  EXPECT_THROW(parse_document(R"({"nvars": 2, "gens": [[1, "x"]]})"), ArgumentError);
  EXPECT_THROW(parse_document(R"({"nvars": 2, "gens": [[1, -1]]})"), ArgumentError);
}

TEST(Csv, WriteAndParse) {
  auto s = merge(mu_sequence_brute(ideal_I_am(5, 10), 4), mu_sequence_formula(FamilyParams::iam(5, 10), 4));
  const std::string csv = to_csv(s);
  EXPECT_EQ(csv.substr(0, 12), "k,mu,source\n");
  EXPECT_NE(csv.find("2,49,brute\n2,49,formula\n"), std::string::npos);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  auto back = parse_csv(csv, s.params());
  EXPECT_EQ(back.entries(), s.entries());
  EXPECT_EQ(to_csv(back), csv);
}

TEST(Csv, BigValuesAreDecimal) {
  auto s = mu_sequence_formula(FamilyParams::product(20, 16), 340);
  const auto csv = to_csv(s);
  EXPECT_EQ(parse_csv(csv).values(), s.values());
  EXPECT_EQ(csv.find(','), 1u);
  EXPECT_EQ(csv.find('e', 12), std::string::npos);  // no exponent notation after the header
}

TEST(Csv, Errors) {
  EXPECT_THROW(parse_csv(""), ArgumentError);
  EXPECT_THROW(parse_csv("a,b,c\n1,2,brute\n"), ArgumentError);
  EXPECT_THROW(parse_csv("k,mu,source\n1,2\n"), ArgumentError);
  EXPECT_THROW(parse_csv("k,mu,source\n1,x,brute\n"), ArgumentError);
  EXPECT_THROW(parse_csv("k,mu,source\n1,2,guess\n"), ArgumentError);
  EXPECT_THROW(parse_csv("k,mu,source\n2,2,brute\n"), ArgumentError);
}
