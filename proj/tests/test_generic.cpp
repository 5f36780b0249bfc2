#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace zp;
using zp::testing::parse_all;

namespace {

PrincipalizationResult golden() { return principalize(parse_all({"x^4*y", "x^7 + x*y^4"})); }

}  // namespace

TEST(Lambda, Sampling) {
  EXPECT_EQ(sample_lambda(3, 7, 0), (std::vector<Rational>{Rational(1), Rational(1), Rational(1)}));
  auto a = sample_lambda(3, 7, 2), b = sample_lambda(3, 7, 2);
  EXPECT_EQ(a, b);
  for (int attempt = 1; attempt < 40; ++attempt)
    for (auto& x : sample_lambda(4, 11, attempt)) {
      EXPECT_FALSE(x.is_zero());
      EXPECT_LE(x, Rational(9));
      EXPECT_GE(x, Rational(-9));
    }
  EXPECT_THROW(sample_lambda(0, 1, 0), Error);
}

TEST(CountN, Golden) {
  auto r = golden();
  const std::vector<Rational> ones{Rational(1), Rational(1)};
  EXPECT_EQ(count_n(r.state, ones, 0), 3);
  EXPECT_EQ(count_n(r.state, ones, 1), 0);
  EXPECT_EQ(count_n(r.state, ones, 2), 1);
}

TEST(CountN, DegenerateLambda) {
  auto r = golden();
  try {
    count_n(r.state, {Rational(1), Rational(0)}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_lambda);
  }
}

TEST(Relations, GoldenRows) {
  auto r = golden();
  auto rows = verify_relations(r.state, r.diagram, {Rational(1), Rational(1)});
  ASSERT_EQ(rows.size(), 3u);
  for (auto& row : rows) EXPECT_TRUE(row.pass()) << row.divisor;
  EXPECT_EQ(rows[0].m, 2);
  EXPECT_EQ(rows[0].alpha_sum, Rational(6, 5));
  EXPECT_EQ(rows[0].count_rhs, Rational(6, 5));
}

TEST(MinProperty, Golden) {
  auto r = golden();
  auto rows = verify_min_property(r.state, {Rational(1), Rational(1)});
  ASSERT_EQ(rows.size(), 4u);
  for (auto& row : rows) EXPECT_TRUE(row.pass()) << row.divisor;
  EXPECT_EQ(rows[0].generic_order, 5);
  EXPECT_EQ(rows[3].divisor, "h-part 1");
}

TEST(MinProperty, SpecialLambdaFails) {
  // The difference of the generators is -x^2, of order 2 on E1.
  auto r = principalize(parse_all({"x + y", "x + y + x^2"}));
  auto rows = verify_min_property(r.state, {Rational(1), Rational(-1)});
  bool any_fail = false;
  for (auto& row : rows) any_fail = any_fail || !row.pass();
  EXPECT_TRUE(any_fail);
}

TEST(GenericCheck, CorpusPasses) {
  for (auto& p : zp::testing::principalize_corpus(zp::testing::full_corpus())) {
    if (p.result.state.events.empty()) continue;
    auto rep = generic_check(p.result, 42);
    EXPECT_TRUE(rep.pass()) << describe(p.entry);
    EXPECT_LT(rep.retries, kLambdaRetries);
  }
}

TEST(GenericCheck, SingleCurves) {
  for (auto& p : zp::testing::principalize_corpus(zp::testing::curve_entries())) {
    if (p.result.state.events.empty()) continue;
    auto rep = generic_check(p.result, 1);
    EXPECT_TRUE(rep.pass()) << describe(p.entry);
  }
}

TEST(GenericCheck, SeedDeterminism) {
  auto r = principalize(parse_all({"x*y*(x + y)", "x^6 + y^5"}));
  auto a = generic_check(r, 9), b = generic_check(r, 9);
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_EQ(a.retries, b.retries);
}

TEST(CountN, IndependentOfAcceptedLambda) {
  int compared = 0;
  for (auto& p : zp::testing::principalize_corpus(zp::testing::full_corpus())) {
    const auto& st = p.result.state;
    if (st.events.empty()) continue;
    const auto first = generic_check(p.result, 3);
    const int l = static_cast<int>(st.generators.size());
    for (int attempt = first.retries + 1; attempt < 40; ++attempt) {
      const auto lam = sample_lambda(l, 3, attempt);
      try {
        auto rows = verify_min_property(st, lam);
        if (!std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.pass(); })) continue;
        auto rel = verify_relations(st, p.result.diagram, lam);
        for (std::size_t i = 0; i < rel.size(); ++i) EXPECT_EQ(rel[i].n, first.relations[i].n) << describe(p.entry);
        ++compared;
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::degenerate_lambda) throw;
      }
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(CountN, GenericMemberMeetsSomething) {
  for (auto& p : zp::testing::principalize_corpus(zp::testing::full_corpus())) {
    const auto& st = p.result.state;
    if (st.events.empty() || st.generators.size() < 2) continue;
    int total = 0;
    for (auto& row : generic_check(p.result, 1).relations) total += row.n;
    EXPECT_GE(total, 1) << describe(p.entry);
  }
}
