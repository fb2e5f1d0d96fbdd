#include <gtest/gtest.h>

#include <random>

#include "monocurve/division.hpp"
#include "monocurve/errors.hpp"
#include "monocurve/poly_io.hpp"
#include "test_support.hpp"

namespace monocurve {
namespace {

Polynomial P(std::string_view text, std::size_t n) {
  return parse_polynomial(text, default_variable_names(n));
}

std::string S(const Polynomial& f) {
  return to_string(f, default_variable_names(f.num_variables()));
}

TEST(Monomial, Basics) {
  Monomial a{2, 0, 1};
  Monomial b{1, 1, 0};
  EXPECT_EQ(a.total_degree(), 3u);
  EXPECT_EQ(a.lcm(b), (Monomial{2, 1, 1}));
  EXPECT_EQ(a.gcd(b), (Monomial{1, 0, 0}));
  EXPECT_EQ(a * b, (Monomial{3, 1, 1}));
  EXPECT_TRUE((Monomial{1, 0, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a.quotient(Monomial{1, 0, 1}), (Monomial{1, 0, 0}));
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE((Monomial{0, 2, 0}).coprime(Monomial{3, 0, 1}));
  std::vector<std::int64_t> w{3, 5, 7};
  EXPECT_EQ(a.weighted_degree(w), 13);
  EXPECT_TRUE(Monomial(3).is_one());
  EXPECT_EQ(a.extended(4), (Monomial{2, 0, 1, 4}));
  EXPECT_EQ(a.extended(4).truncated(3), a);
}

TEST(Monomial, ExponentOverflowIsGuarded) {
  Monomial big{0xFFFFFFFFu};
  EXPECT_THROW(big * Monomial{1}, GuardViolation);
}

TEST(MonomialOrder, CompareExamples) {
  // x2 outranks any power of x1 when x2 > x1 > x0 > x3.
  auto lex = MonomialOrder::lex({2, 1, 0, 3});
  EXPECT_TRUE(lex.greater(Monomial{0, 0, 1, 0}, Monomial{0, 2, 0, 0}));
  EXPECT_TRUE(lex.greater(Monomial{0, 0, 1, 0}, Monomial{0, 9, 9, 0}) == false);
  EXPECT_TRUE(lex.greater(Monomial{0, 0, 1, 0}, Monomial{0, 9, 0, 9}));

  Monomial u{1, 2, 3};
  for (auto order : {MonomialOrder::lex(3), MonomialOrder::graded_lex(3),
                     MonomialOrder::graded_revlex(3),
                     MonomialOrder::weighted({3, 5, 7})}) {
    EXPECT_EQ(order.compare(u, u), std::strong_ordering::equal);
  }
  auto w = MonomialOrder::weighted({2, 3});
  EXPECT_TRUE(w.greater(Monomial{2, 0}, Monomial{0, 1}));
  EXPECT_EQ(w.degree(Monomial{2, 1}), 7);
}

TEST(MonomialOrder, GradedRevlexTieBreak) {
  // Standard textbook pair: x0 x2^2 vs x1^3 ... and x0^2 x2 vs x0 x1^2.
  auto grevlex = MonomialOrder::graded_revlex(3);
  EXPECT_TRUE(grevlex.greater(Monomial{1, 2, 0}, Monomial{2, 0, 1}));
  auto grlex = MonomialOrder::graded_lex(3);
  EXPECT_TRUE(grlex.greater(Monomial{2, 0, 1}, Monomial{1, 2, 0}));
  EXPECT_TRUE(grevlex.greater(Monomial{0, 0, 4}, Monomial{1, 1, 0}));
}

TEST(MonomialOrder, RejectsMismatchedLength) {
  auto lex = MonomialOrder::lex(3);
  EXPECT_THROW(lex.compare(Monomial{1, 0}, Monomial{0, 1}), ValidationError);
  EXPECT_THROW(MonomialOrder::lex({0, 0, 1}), ValidationError);
  EXPECT_THROW(MonomialOrder::weighted({1, 0}), ValidationError);
}

TEST(MonomialOrder, BlockEliminationPutsFirstBlockOnTop) {
  // t is variable 2 and alone in the first block.
  auto order = MonomialOrder::block_elimination({2, 0, 1}, {3, 5, 1}, 1);
  EXPECT_TRUE(order.greater(Monomial{0, 0, 1}, Monomial{9, 9, 0}));
  EXPECT_TRUE(order.greater(Monomial{0, 2, 0}, Monomial{3, 0, 0}));
  EXPECT_FALSE(order.is_degree_compatible());
  EXPECT_FALSE(MonomialOrder::weighted({3, 5}).is_degree_compatible());
  EXPECT_TRUE(MonomialOrder::weighted({2, 2}).is_degree_compatible());
  EXPECT_FALSE(MonomialOrder::lex(2).is_degree_compatible());
}

TEST(MonomialOrder, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  const std::size_t n = 4;
  std::vector<MonomialOrder> orders{
      MonomialOrder::lex({3, 1, 0, 2}),
      MonomialOrder::graded_lex({1, 0, 2, 3}),
      MonomialOrder::graded_revlex(4),
      MonomialOrder::weighted({2, 0, 1, 3}, {4, 5, 6, 7}),
      MonomialOrder::block_elimination({3, 0, 1, 2}, {2, 3, 5, 1}, 1),
      MonomialOrder::graded_revlex(3).homogenized(),
  };
  Monomial one(n);
  for (const auto& order : orders) {
    for (int k = 0; k < 10000; ++k) {
      auto u = testing::random_monomial(rng, n, 6);
      auto v = testing::random_monomial(rng, n, 6);
      auto w = testing::random_monomial(rng, n, 6);
      auto uv = order.compare(u, v);
      ASSERT_EQ(uv == 0, u == v) << order.describe();
      ASSERT_EQ(uv, 0 <=> order.compare(v, u)) << order.describe();
      if (uv > 0) {
        ASSERT_TRUE(order.greater(u * w, v * w)) << order.describe();
      }
      if (order.greater(u, v) && order.greater(v, w)) {
        ASSERT_TRUE(order.greater(u, w)) << order.describe();
      }
      ASSERT_TRUE(u.is_one() || order.greater(u, one)) << order.describe();
    }
  }
}

TEST(Polynomial, LeadingData) {
  auto lex = MonomialOrder::lex(2);
  auto f = P("x0^3 - x1^2", 2);
  EXPECT_EQ(f.leading_monomial(lex), (Monomial{3, 0}));
  EXPECT_EQ(f.leading_coefficient(lex), 1);

  auto g = P("5*x1^2", 2);
  for (auto order : {lex, MonomialOrder::graded_revlex(2)}) {
    EXPECT_EQ(g.leading_coefficient(order), 5);
    EXPECT_EQ(g.leading_monomial(order), (Monomial{0, 2}));
  }

  auto g2 = P("x2*x3 - x1*x0", 4);
  EXPECT_EQ(g2.leading_monomial(MonomialOrder::lex({2, 1, 0, 3})),
            (Monomial{0, 0, 1, 1}));

  EXPECT_THROW(Polynomial(2).leading_term(lex), ValidationError);
}

TEST(Polynomial, Arithmetic) {
  auto f = P("x0^3 - x1^2", 2);
  EXPECT_TRUE((f + f.scaled(-1)).is_zero());
  EXPECT_EQ(P("x0 + x1", 2) * P("x0 - x1", 2), P("x0^2 - x1^2", 2));
  EXPECT_EQ(pow(P("x0 + 1", 1), 3), P("x0^3 + 3*x0^2 + 3*x0 + 1", 1));
  EXPECT_THROW(P("x0", 1) + P("x0", 2), ValidationError);

  // x0 -> t^2, x1 -> t^3
  std::vector<Polynomial> images{P("x0^2", 1), P("x0^3", 1)};
  EXPECT_TRUE(f.substitute(images).is_zero());
  EXPECT_EQ(P("x0 - x1", 2).substitute(images), P("x0^2 - x0^3", 1));

  std::vector<Rational> pt{Rational(1, 2), 3};
  EXPECT_EQ(P("2*x0*x1 - x1", 2).evaluate(pt), 0);

  EXPECT_TRUE(f.is_pure_binomial());
  EXPECT_FALSE(P("x0 - 2*x1", 2).is_pure_binomial());
  std::vector<std::int64_t> w{2, 3};
  EXPECT_TRUE(f.is_homogeneous(w));
  EXPECT_EQ(f.weighted_degree(w), 6);
}

TEST(Polynomial, RingIdentitiesOnRandomInput) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto a = testing::random_polynomial(rng, 3, 5, 3);
    auto b = testing::random_polynomial(rng, 3, 5, 3);
    auto c = testing::random_polynomial(rng, 3, 5, 3);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a - b) + b, a);
    auto d = a;
    d.subtract_multiple(Rational(2, 3), Monomial{1, 0, 2}, b);
    ASSERT_EQ(d, a - b.times_term(Rational(2, 3), Monomial{1, 0, 2}));
  }
}

TEST(Division, Examples) {
  auto lex = MonomialOrder::lex(2);
  auto g = P("x0^3 - x1^2", 2);
  std::vector<Polynomial> gs{g};

  auto self = divide(g, gs, lex);
  EXPECT_EQ(self.quotients[0], Polynomial::constant(2, 1));
  EXPECT_TRUE(self.remainder.is_zero());

  auto r = divide(P("x0^3", 2), gs, lex);
  EXPECT_EQ(r.quotients[0], Polynomial::constant(2, 1));
  EXPECT_EQ(r.remainder, P("x1^2", 2));

  std::vector<Polynomial> hs{P("x0^2", 2), P("x0*x1", 2)};
  auto none = divide(P("x1^3 + x1", 2), hs, lex);
  EXPECT_TRUE(none.quotients[0].is_zero());
  EXPECT_TRUE(none.quotients[1].is_zero());
  EXPECT_EQ(none.remainder, P("x1^3 + x1", 2));
}

TEST(Division, FirstMatchingDivisorWins) {
  auto lex = MonomialOrder::lex(2);
  std::vector<Polynomial> gs{P("x0 - x1", 2), P("x0 - 1", 2)};
  auto rec = divide(P("x0", 2), gs, lex);
  EXPECT_EQ(rec.quotients[0], Polynomial::constant(2, 1));
  EXPECT_TRUE(rec.quotients[1].is_zero());
  EXPECT_EQ(rec.remainder, P("x1", 2));
}

TEST(Division, ReconstructsDividend) {
  std::mt19937_64 rng(13);
  auto order = MonomialOrder::graded_revlex(3);
  for (int k = 0; k < 200; ++k) {
    auto f = testing::random_polynomial(rng, 3, 8, 4);
    std::vector<Polynomial> gs;
    for (int j = 0; j < 3; ++j) gs.push_back(testing::random_polynomial(rng, 3, 3, 2));
    auto rec = divide(f, gs, order);
    Polynomial sum = rec.remainder;
    for (std::size_t j = 0; j < gs.size(); ++j) sum += rec.quotients[j] * gs[j];
    ASSERT_EQ(sum, f);
    // no remainder term is divisible by any leading monomial
    for (const auto& t : rec.remainder.terms()) {
      for (const auto& g : gs) {
        ASSERT_FALSE(g.leading_monomial(order).divides(t.monomial));
      }
    }
  }
}

TEST(SPolynomial, Examples) {
  auto lex = MonomialOrder::lex(2);
  auto f = P("x0^3 - x1^2", 2);
  auto g = P("x0*x1 - x0", 2);
  EXPECT_TRUE(s_polynomial(f, f, lex).is_zero());
  // Direct expansion: x1*f - x0^2*g
  auto expected = f.times_term(1, Monomial{0, 1}) - g.times_term(1, Monomial{2, 0});
  EXPECT_EQ(s_polynomial(f, g, lex), expected);
  EXPECT_EQ(s_polynomial(f, g, lex), P("x0^3 - x1^3", 2));
  EXPECT_THROW(s_polynomial(f, Polynomial(2), lex), ValidationError);
}

TEST(SPolynomial, Antisymmetry) {
  std::mt19937_64 rng(17);
  auto order = MonomialOrder::graded_revlex(3);
  for (int k = 0; k < 300; ++k) {
    auto f = testing::random_polynomial(rng, 3, 4, 3).monic(order);
    auto g = testing::random_polynomial(rng, 3, 4, 3).monic(order);
    ASSERT_EQ(s_polynomial(f, g, order), -s_polynomial(g, f, order));
  }
}

TEST(SPolynomial, CoprimeLeadsReduceToZero) {
  std::mt19937_64 rng(23);
  auto order = MonomialOrder::graded_revlex(3);
  for (int k = 0; k < 200; ++k) {
    // tails have degree <= 3, so the added degree-5 terms lead
    auto f = testing::random_polynomial(rng, 3, 4, 1);
    f.add_term(1, Monomial{5, 0, 0});
    auto g = testing::random_polynomial(rng, 3, 4, 1);
    g.add_term(1, Monomial{0, 2, 3});
    auto lf = f.leading_monomial(order);
    auto lg = g.leading_monomial(order);
    ASSERT_TRUE(lf.coprime(lg));
    auto s = s_polynomial(f, g, order);
    ASSERT_EQ(s, f.times_term(1, lg) - g.times_term(1, lf));
    std::vector<Polynomial> fg{f, g};
    ASSERT_TRUE(divide(s, fg, order).remainder.is_zero());
  }
}

TEST(PolyIo, FormatsCanonically) {
  EXPECT_EQ(S(P("x0^3 - x1^2", 2)), "x0^3 - x1^2");
  EXPECT_EQ(S(P("-x1^2 + x0^3", 2)), "x0^3 - x1^2");
  EXPECT_EQ(S(P("3/2*x0 + 1", 2)), "3/2*x0 + 1");
  EXPECT_EQ(S(Polynomial(2)), "0");
  EXPECT_EQ(S(P("x0 - x0", 2)), "0");
  EXPECT_EQ(S(P("2 x0 x1^2", 2)), "2*x0*x1^2");
}

TEST(PolyIo, RejectsMalformedInput) {
  auto names = default_variable_names(2);
  EXPECT_THROW(parse_polynomial("x2", names), ValidationError);
  EXPECT_THROW(parse_polynomial("x0^", names), ValidationError);
  EXPECT_THROW(parse_polynomial("x0 +", names), ValidationError);
  EXPECT_THROW(parse_polynomial("1/0", names), ValidationError);
  EXPECT_THROW(parse_polynomial("x10", names), ValidationError);
}

TEST(PolyIo, RoundTrip) {
  std::mt19937_64 rng(19);
  auto names = default_variable_names(4);
  for (int k = 0; k < 300; ++k) {
    auto f = testing::random_polynomial(rng, 4, 6, 5);
    f = f.scaled(Rational(1, 1 + static_cast<int>(k % 7)));
    ASSERT_EQ(parse_polynomial(to_string(f, names), names), f);
  }
  VariableNames custom{"x", "y", "z", "t"};
  auto f = parse_polynomial("x^2*y - 3*t", custom);
  EXPECT_EQ(to_string(f, custom), "x^2*y - 3*t");
}

}  // namespace
}  // namespace monocurve
