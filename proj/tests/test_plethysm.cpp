#include <gtest/gtest.h>

#include "charhopf/monomial.hpp"
#include "charhopf/plethysm.hpp"
#include "oracles/oracles.hpp"

using namespace charhopf;

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(Characters, Examples) {
  for (const auto& mu : partitions_of(5)) EXPECT_EQ(mn_character({5}, mu), 1);
  EXPECT_EQ(mn_character({1, 1}, {2}), -1);
  EXPECT_EQ(mn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(mn_character({2, 1}, {3}), -1);
  EXPECT_EQ(mn_character({}, {}), 1);
  EXPECT_THROW(mn_character({2}, {1}), std::invalid_argument);
}

TEST(Characters, DimensionIsStandardTableauxCount) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      EXPECT_EQ(Integer(mn_character(lambda, Partition(std::vector<int>(n, 1)))),
                oracle::standard_tableaux(lambda.parts()));
}

TEST(Characters, SignCharacter) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      const int sign = (n - static_cast<int>(mu.length())) % 2 ? -1 : 1;
      EXPECT_EQ(mn_character(Partition(std::vector<int>(n, 1)), mu), sign);
    }
}

TEST(Characters, Orthogonality) {
  for (int n = 1; n <= 6; ++n) {
    Rational group = 0;
    for (const auto& mu : partitions_of(n)) group += Rational(factorial(n)) / Rational(z_factor(mu));
    EXPECT_EQ(group, Rational(factorial(n)));
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        Rational inner = 0;
        for (const auto& mu : partitions_of(n))
          inner += Rational(mn_character(a, mu) * mn_character(b, mu)) / Rational(z_factor(mu));
        EXPECT_EQ(inner, Rational(a == b ? 1 : 0));
      }
  }
}

TEST(PowerSum, Transitions) {
  EXPECT_EQ(to_powersum(s({1})), PowerSumFunc::p({1}));
  EXPECT_EQ(from_powersum(PowerSumFunc::p({1})), s({1}));
  PowerSumFunc s2 = PowerSumFunc::p({1, 1}, Rational(1, 2));
  s2 += PowerSumFunc::p({2}, Rational(1, 2));
  EXPECT_EQ(to_powersum(s({2})), s2);
  EXPECT_EQ(from_powersum(PowerSumFunc::p({2})), s({2}) - s({1, 1}));
  EXPECT_EQ(z_factor({2, 2, 1}), 8);
  EXPECT_EQ(z_factor({}), 1);
}

TEST(PowerSum, RoundTrip) {
  for (const auto& p : partitions_up_to(7)) EXPECT_EQ(from_powersum(to_powersum(SymFunc::schur(p))), SymFunc::schur(p));
}

TEST(PowerSum, NonIntegralIsRejected) {
  try {
    from_powersum(PowerSumFunc::p({2}, Rational(1, 2)));
    FAIL() << "expected std::domain_error";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("[2]"), std::string::npos);
  }
}

TEST(Plethysm, PowerSumComposition) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      EXPECT_EQ(powersum_plethysm(n, PowerSumFunc::p({m})), PowerSumFunc::p({n * m}));
      const SymFunc pn = from_powersum(PowerSumFunc::p({n}));
      const SymFunc pm = from_powersum(PowerSumFunc::p({m}));
      EXPECT_EQ(plethysm(pn, pm), from_powersum(PowerSumFunc::p({n * m})));
    }
}

TEST(Plethysm, Examples) {
  EXPECT_EQ(plethysm(s({2}), s({2})), s({4}) + s({2, 2}));
  EXPECT_EQ(plethysm(s({1, 1}), s({2})), s({3, 1}));
  EXPECT_EQ(plethysm(s({2}), s({1, 1})), s({2, 2}) + s({1, 1, 1, 1}));
  EXPECT_EQ(plethysm(s({3}), s({2})), s({6}) + s({4, 2}) + s({2, 2, 2}));
  EXPECT_TRUE(plethysm(SymFunc{}, s({2})).is_zero());
}

TEST(Plethysm, ExamplesAgainstSubstitution) {
  EXPECT_EQ(monomial_oracle(plethysm(s({2}), s({2})), 3), oracle::substitution(s({2}), s({2}), 3));
  EXPECT_EQ(monomial_oracle(plethysm(s({1, 1}), s({2})), 3), oracle::substitution(s({1, 1}), s({2}), 3));
}

TEST(Plethysm, TrivialInnerAndOuter) {
  for (const auto& p : partitions_up_to(4)) {
    const SymFunc f = SymFunc::schur(p);
    EXPECT_EQ(plethysm(f, s({1})), f);
    EXPECT_EQ(plethysm(s({1}), f), f);
  }
}

TEST(Plethysm, RingMorphismInOuterArgument) {
  for (const auto& a : partitions_up_to(2))
    for (const auto& b : partitions_up_to(2))
      for (const auto& g : partitions_up_to(2)) {
        const SymFunc fa = SymFunc::schur(a), fb = SymFunc::schur(b), sg = SymFunc::schur(g);
        EXPECT_EQ(plethysm(fa * fb, sg), plethysm(fa, sg) * plethysm(fb, sg));
      }
}

TEST(Plethysm, MatchesSubstitutionOracle) {
  for (const auto& f : partitions_up_to(3))
    for (const auto& g : partitions_up_to(2)) {
      const SymFunc sf = SymFunc::schur(f), sg = SymFunc::schur(g);
      EXPECT_EQ(monomial_oracle(plethysm(sf, sg), 3), oracle::substitution(sf, sg, 3)) << to_string(f) << "[" << to_string(g)
                                                                              << "]";
    }
}

TEST(Plethysm, ResultsAreIntegral) {
  for (const auto& f : partitions_up_to(3))
    for (const auto& g : partitions_up_to(3)) {
      const SymFunc r = plethysm(SymFunc::schur(f), SymFunc::schur(g));
      EXPECT_NO_THROW(from_powersum(to_powersum(r)));
      for (const auto& [p, c] : r.terms()) EXPECT_GT(c, 0);
    }
}

TEST(Plethysm, MemoizedMatchesDirect) {
  EXPECT_EQ(schur_plethysm({2, 1}, {2}), plethysm(s({2, 1}), s({2})));
  EXPECT_EQ(&schur_plethysm({2, 1}, {2}), &schur_plethysm({2, 1}, {2}));
}
