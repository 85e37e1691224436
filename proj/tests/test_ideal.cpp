#include <gtest/gtest.h>

#include <algorithm>

#include "monideal/errors.hpp"
#include "monideal/ideal.hpp"
#include "test_support.hpp"

using namespace monideal;
using namespace monideal::testing;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> gens) { return minimalize(std::move(gens), n); }

// (x^3, y^3)(x, y)
MonomialIdeal j31() { return product(ideal(2, {{3, 0}, {0, 3}}), ideal(2, {{1, 0}, {0, 1}})); }

}  // namespace

// minimalize

TEST(Minimalize, DropsMultiples) {
  auto I = ideal(2, {{2, 0}, {3, 0}, {0, 1}});
  EXPECT_EQ(I.generators(), (std::vector<Monomial>{{0, 1}, {2, 0}}));
}

TEST(Minimalize, KeepsAntichain) {
  // pairwise incomparable: x^8, x^6y^2, x^2y^6, y^8, x^5y^4
  std::vector<Monomial> gens{{8, 0}, {6, 2}, {2, 6}, {0, 8}, {5, 4}};
  EXPECT_EQ(naive_minimal(to_vecs(gens)).size(), 5u);
  EXPECT_EQ(ideal(2, gens).size(), 5u);
}

TEST(Minimalize, Singleton) {
  auto I = ideal(3, {{1, 2, 3}});
  EXPECT_EQ(I.generators(), (std::vector<Monomial>{{1, 2, 3}}));
}

TEST(Minimalize, EmptyInputIsZeroIdeal) {
  auto I = ideal(2, {});
  EXPECT_TRUE(I.is_zero());
  EXPECT_EQ(num_min_gens(I), 0u);
}

TEST(Minimalize, DimensionMismatch) {
  EXPECT_THROW(ideal(2, {{1, 0}, {1, 0, 0}}), DimensionError);
  EXPECT_THROW(ideal(0, {}), ArgumentError);
}

TEST(Minimalize, OneAbsorbsEverything) {
  auto I = ideal(2, {{3, 1}, {0, 0}, {1, 1}});
  EXPECT_TRUE(I.is_unit());
}

TEST(Minimalize, MatchesNaiveOracleOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto gens = random_monomials(rng, n, 1 + trial % 25, 6);
      auto I = minimalize(gens, n);
      EXPECT_EQ(as_set(I), naive_minimal(to_vecs(gens))) << "n=" << n << " trial=" << trial;
      EXPECT_TRUE(is_antichain(I.generators()));
      EXPECT_TRUE(std::is_sorted(I.generators().begin(), I.generators().end(), CanonicalLess{}));
    }
  }
}

TEST(Minimalize, IdempotentAndOrderIndependent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto gens = random_monomials(rng, n, 20, 5);
    auto I = minimalize(gens, n);
    EXPECT_EQ(minimalize(I.generators(), n), I);
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(minimalize(gens, n), I);
  }
}

// product / power

TEST(Product, BasicIdealDegreeFour) {
  EXPECT_EQ(j31().generators(), (std::vector<Monomial>{{4, 0}, {3, 1}, {1, 3}, {0, 4}}));
}

TEST(Product, PurePowersTimesSquareIsMaximalPower) {
  // (x^3, y^3)(x, y)^2 = (x, y)^5 with c = 2 = (n-1)(a-1)
  auto lhs = product(ideal(2, {{3, 0}, {0, 3}}), maximal_ideal_power(2, 2));
  EXPECT_EQ(lhs, maximal_ideal_power(2, 5));
  EXPECT_EQ(lhs.size(), 6u);
}

TEST(Product, UnitIsIdentityAndZeroAbsorbs) {
  auto A = j31();
  EXPECT_EQ(product(A, MonomialIdeal::unit(2)), A);
  EXPECT_TRUE(product(A, MonomialIdeal(2)).is_zero());
  EXPECT_THROW(product(A, MonomialIdeal::unit(3)), DimensionError);
}

TEST(Product, MatchesNaiveOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto A = minimalize(random_monomials(rng, n, 5, 4), n);
    auto B = minimalize(random_monomials(rng, n, 5, 4), n);
    EXPECT_EQ(as_set(product(A, B)), naive_product(as_set(A), as_set(B)));
  }
}

TEST(Power, BasicIdealCounts) {
  auto J = j31();
  EXPECT_EQ(power(J, 1), J);
  EXPECT_EQ(power(J, 2).size(), 9u);   // (k+1)^2, k = 2 <= a-1
  EXPECT_EQ(power(J, 3).size(), 13u);  // (a+1)k+1, k = 3 >= a-1
}

TEST(Power, ZeroAndNegativeExponent) {
  EXPECT_TRUE(power(j31(), 0).is_unit());
  EXPECT_THROW(power(j31(), -1), ArgumentError);
}

TEST(Power, AddsExponents) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    auto A = random_artinian(rng, 2 + trial % 2, 3, 4);
    for (std::int64_t j = 1; j <= 2; ++j)
      for (std::int64_t k = 1; k <= 2; ++k) EXPECT_EQ(power(A, j + k), product(power(A, j), power(A, k)));
  }
}

TEST(NumMinGens, MaximalIdealPower) {
  for (Exponent c = 0; c <= 12; ++c) EXPECT_EQ(num_min_gens(maximal_ideal_power(2, c)), std::size_t(c + 1));
  EXPECT_EQ(num_min_gens(maximal_ideal_power(3, 4)), 15u);
}

// pseudo-Frobenius

TEST(PseudoFrobenius, Examples) {
  EXPECT_EQ(pseudo_frobenius(maximal_ideal_power(2, 1), 3), ideal(2, {{3, 0}, {0, 3}}));
  EXPECT_EQ(pseudo_frobenius(ideal(2, {{2, 0}, {1, 1}}), 2), ideal(2, {{4, 0}, {2, 2}}));
  EXPECT_THROW(pseudo_frobenius(j31(), 0), ArgumentError);
}

TEST(PseudoFrobenius, PreservesCountAndScalesSocle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto A = random_artinian(rng, n, 4, 6);
    if (A.is_unit()) continue;
    for (Exponent r : {2, 3}) {
      auto F = pseudo_frobenius(A, r);
      EXPECT_EQ(F.size(), A.size());
      EXPECT_EQ(F, minimalize(F.generators(), n));
      const auto n64 = static_cast<Exponent>(n);
      EXPECT_EQ(socle_degree(F), r * (socle_degree(A) + n64) - n64);
    }
  }
}

// Artinian and socle degree

TEST(Artinian, Examples) {
  EXPECT_TRUE(is_artinian(j31()));
  EXPECT_FALSE(is_artinian(ideal(2, {{1, 1}})));
  EXPECT_FALSE(is_artinian(ideal(2, {{1, 0}})));
  EXPECT_FALSE(is_artinian(MonomialIdeal(2)));
  EXPECT_TRUE(is_artinian(MonomialIdeal::unit(2)));
}

TEST(Socle, Examples) {
  for (Exponent c = 1; c <= 9; ++c) EXPECT_EQ(socle_degree(maximal_ideal_power(2, c)), c - 1);
  EXPECT_EQ(socle_degree(j31()), 4);  // witness x^2 y^2
  EXPECT_FALSE(j31().contains(Monomial{2, 2}));
  for (Exponent r = 1; r <= 6; ++r) EXPECT_EQ(socle_degree(ideal(2, {{r, 0}, {0, r}})), 2 * r - 2);
  EXPECT_EQ(socle_degree(ideal(1, {{5}})), 4);
}

TEST(Socle, RejectsNonArtinianAndUnit) {
  EXPECT_THROW(socle_degree(ideal(2, {{1, 1}})), PreconditionError);
  EXPECT_THROW(socle_degree(MonomialIdeal(2)), PreconditionError);
  EXPECT_THROW(socle_degree(MonomialIdeal::unit(2)), PreconditionError);
}

TEST(Socle, MatchesFullBoxEnumeration) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto A = random_artinian(rng, n, 1 + trial % 6, 7);
      if (A.is_unit()) continue;
      EXPECT_EQ(socle_degree(A), naive_socle(as_set(A), n)) << A.to_string();
    }
  }
}

TEST(Socle, PowersOfEMatchClosedForm) {
  // E = (x_i^a)(x_i); s(E^k) = a(k-1)+(a-1)n up to k = (n-1)(a-1), (a+1)k-1 after.
  for (std::size_t n : {2u, 3u}) {
    const auto n64 = static_cast<Exponent>(n);
    for (Exponent a : {3, 4, 5}) {
      const auto E = product(pure_powers_ideal(n, a), maximal_ideal_power(n, 1));
      const Exponent kmax = (n64 - 1) * (a - 1) + 2;
      auto P = E;
      for (Exponent k = 1; k <= kmax; ++k) {
        if (k > 1) P = product(P, E);
        const Exponent want = k <= (n64 - 1) * (a - 1) ? a * (k - 1) + (a - 1) * n64 : (a + 1) * k - 1;
        EXPECT_EQ(socle_degree(P), want) << "n=" << n << " a=" << a << " k=" << k;
      }
    }
  }
}

TEST(Need, BothDirections) {
  // (x_i^a)^k m^c = m^{ka+c} iff c >= (n-1)(a-1)
  for (std::size_t n : {2u, 3u}) {
    for (Exponent a : {3, 4}) {
      const Exponent t = (static_cast<Exponent>(n) - 1) * (a - 1);
      for (Exponent k : {1, 2}) {
        const auto F = power(pure_powers_ideal(n, a), k);
        for (Exponent c = 1; c <= t + 3; ++c) {
          const bool eq = product(F, maximal_ideal_power(n, c)) == maximal_ideal_power(n, k * a + c);
          EXPECT_EQ(eq, c >= t) << "n=" << n << " a=" << a << " k=" << k << " c=" << c;
        }
      }
    }
  }
}

// sum and external product

TEST(IdealSum, AddsMaximalPower) {
  // (x^6,y^6)(x^2,y^2) + (x,y)^9
  auto J = product(ideal(2, {{6, 0}, {0, 6}}), ideal(2, {{2, 0}, {0, 2}}));
  auto I = ideal_sum(J, maximal_ideal_power(2, 9));
  EXPECT_EQ(as_set(I), (std::set<Vec>{{8, 0}, {6, 2}, {2, 6}, {0, 8}, {5, 4}, {4, 5}}));
}

TEST(IdealSum, IdempotentWithZeroIdentity) {
  auto A = j31();
  EXPECT_EQ(ideal_sum(A, A), A);
  EXPECT_EQ(ideal_sum(A, MonomialIdeal(2)), A);
  EXPECT_THROW(ideal_sum(A, MonomialIdeal(3)), DimensionError);
}

TEST(ExternalProduct, Examples) {
  auto xy = external_product(ideal(1, {{1}}), ideal(1, {{1}}));
  EXPECT_EQ(xy.generators(), (std::vector<Monomial>{{1, 1}}));
  EXPECT_EQ(xy.nvars(), 2u);
}

TEST(ExternalProduct, CountsMultiplyAndCommuteWithPowers) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    auto A = random_artinian(rng, 2, 3, 5);
    auto B = random_artinian(rng, 2, 3, 5);
    auto AB = external_product(A, B);
    EXPECT_EQ(AB.size(), A.size() * B.size());
    EXPECT_EQ(naive_minimal(as_vecs(AB)).size(), AB.size());
    for (std::int64_t k = 1; k <= 3; ++k) {
      auto lhs = power(AB, k);
      EXPECT_EQ(lhs, external_product(power(A, k), power(B, k)));
      EXPECT_EQ(lhs.size(), power(A, k).size() * power(B, k).size());
    }
  }
}

TEST(Antichain, HoldsAfterEveryOperation) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_artinian(rng, 3, 3, 4);
    auto B = random_artinian(rng, 3, 3, 4);
    for (const auto& I : {product(A, B), ideal_sum(A, B), power(A, 3), pseudo_frobenius(B, 2),
                          external_product(A, B)}) {
      EXPECT_TRUE(is_antichain(I.generators()));
    }
  }
}
