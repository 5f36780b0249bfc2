#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace zp;

TEST(Family, Build) {
  auto g = family::build(7, 4);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], parse_poly("x^4*y"));
  EXPECT_EQ(g[1], parse_poly("x^7 + y^5"));
  try {
    family::build(3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parameter_order);
  }
  EXPECT_THROW(family::build(3, -1), Error);
}

TEST(Family, ChainMatchesPrediction) {
  for (long a = 1; a <= 12; ++a)
    for (long b = 0; b < a; ++b) {
      auto r = principalize(family::build(a, b));
      EXPECT_TRUE(family::matches_chain(r.diagram, a, b)) << a << "," << b;
      EXPECT_EQ(r.step_count, a - b);
    }
}

TEST(Family, PoleAtLastCurve) {
  // The last curve E_(a-b) has ratio (a-b+1)/a.
  for (long a = 2; a <= 10; ++a)
    for (long b = 0; b < a; ++b) {
      auto poles = poles_of(local_zeta(principalize(family::build(a, b)).diagram));
      const Rational s0(-(a - b + 1), a);
      EXPECT_TRUE(std::any_of(poles.begin(), poles.end(), [&](const Pole& p) { return p.location == s0; })) << a << "," << b;
    }
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(family::admissible(Rational(-1)));
  EXPECT_TRUE(family::admissible(Rational(-2)));
  EXPECT_TRUE(family::admissible(Rational(-3, 2)));
  EXPECT_TRUE(family::admissible(Rational(-5, 4)));
  EXPECT_TRUE(family::admissible(Rational(-1, 50)));
  EXPECT_FALSE(family::admissible(Rational(0)));
  EXPECT_FALSE(family::admissible(Rational(-5, 2)));
  EXPECT_FALSE(family::admissible(Rational(-5, 3)));
  EXPECT_FALSE(family::admissible(Rational(1, 2)));
  EXPECT_FALSE(family::admissible(Rational(-3)));
}

TEST(Realize, Examples) {
  EXPECT_EQ(family::realize_pole(Rational(-3, 5)), std::make_pair(5L, 3L));
  EXPECT_EQ(family::realize_pole(Rational(-1)), std::make_pair(2L, 1L));
  EXPECT_EQ(family::realize_pole(Rational(-2)), std::make_pair(1L, 0L));
  EXPECT_EQ(family::realize_pole(Rational(-3, 2)), std::make_pair(2L, 0L));
  try {
    family::realize_pole(Rational(-5, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::out_of_range);
  }
}

TEST(Realize, VerifiedOnSample) {
  const std::vector<Rational> sample = {Rational(-1),     Rational(-2),     Rational(-3, 2),  Rational(-4, 3),
                                        Rational(-1, 2),  Rational(-1, 3),  Rational(-2, 3),  Rational(-3, 5),
                                        Rational(-4, 7),  Rational(-7, 13), Rational(-1, 20), Rational(-19, 20)};
  for (auto& s0 : sample) {
    auto r = family::realize_and_verify(s0);
    EXPECT_TRUE(r.verified) << s0.str() << " -> (" << r.a << "," << r.b << ")";
  }
}
