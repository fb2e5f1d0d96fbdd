#include <gtest/gtest.h>

#include "monocurve/derivations.hpp"
#include "test_support.hpp"

namespace monocurve {
namespace {

using Gens = std::vector<std::int64_t>;

TEST(Derivations, Examples) {
  auto k357 = derivation_rank(NumericalSemigroup({3, 5, 7}));
  EXPECT_EQ(k357.delta_prime, (Gens{2, 4}));
  EXPECT_EQ(k357.mu, 3);
  EXPECT_EQ(k357.generator_exponents, (Gens{1, 3, 5}));

  auto n = derivation_rank(NumericalSemigroup({1}));
  EXPECT_TRUE(n.delta_prime.empty());
  EXPECT_EQ(n.mu, 1);
  EXPECT_EQ(n.generator_exponents, (Gens{1}));

  auto k23 = derivation_rank(NumericalSemigroup({2, 3}));
  EXPECT_EQ(k23.delta_prime, (Gens{1}));
  EXPECT_EQ(k23.mu, 2);
  EXPECT_EQ(k23.generator_exponents, (Gens{1, 2}));
}

TEST(Derivations, MatchesFullDefinitionOnSmallSemigroups) {
  std::size_t visited = 0;
  testing::for_each_semigroup(6, 30, [&](const testing::KunzSemigroup& ks) {
    ++visited;
    NumericalSemigroup s(ks.minimal_generators());
    ASSERT_EQ(s.frobenius(), ks.frobenius());
    auto k = derivation_rank(s);
    ASSERT_EQ(k.delta_prime, testing::brute_delta_prime(ks));
    ASSERT_EQ(k.mu, static_cast<std::int64_t>(k.delta_prime.size()) + 1);
    ASSERT_EQ(k.mu == 1, ks.m == 1);
    auto gaps = s.gaps();
    for (auto a : k.delta_prime) {
      ASSERT_TRUE(std::binary_search(gaps.begin(), gaps.end(), a));
    }
  });
  EXPECT_GT(visited, 1000u);
}

// The Kunz enumeration itself, against a direct count for tiny bounds.
TEST(Derivations, EnumerationOracleIsComplete) {
  std::set<Gens> seen;
  testing::for_each_semigroup(4, 9, [&](const testing::KunzSemigroup& ks) {
    seen.insert(ks.minimal_generators());
  });
  std::set<Gens> direct;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& g : testing::enumerate_minimal_systems(k, 13)) {
      if (g.front() <= 4 && testing::brute_frobenius(g, 40) <= 9) direct.insert(g);
    }
  }
  direct.insert(Gens{1});
  EXPECT_EQ(seen, direct);
}

}  // namespace
}  // namespace monocurve
